#include "symf/plethysm.hpp"

#include "symf/errors.hpp"

namespace symf {

GradedSeries::GradedSeries(int truncation_degree) : truncation_(truncation_degree)
{
    if (truncation_degree < 0)
        throw UsageError("truncation degree must be nonnegative");
}

GradedSeries GradedSeries::from_function(const SymFn& f, int truncation_degree)
{
    GradedSeries s(truncation_degree);
    for (int d = 0; d <= truncation_degree && d <= f.max_degree(); ++d)
        s.set_component(d, f.homogeneous_part(d));
    return s;
}

SymFn GradedSeries::component(int d) const
{
    if (d < 0)
        throw UsageError("negative degree");
    if (d > truncation_)
        throw TruncationError("series truncated at degree " + std::to_string(truncation_)
                              + ", degree " + std::to_string(d) + " requested");
    auto it = components_.find(d);
    return it == components_.end() ? SymFn() : it->second;
}

void GradedSeries::set_component(int d, SymFn f)
{
    if (d < 0 || d > truncation_)
        throw TruncationError("component degree " + std::to_string(d) + " outside 0.."
                              + std::to_string(truncation_));
    if (!f.is_zero() && f.degree() != d)
        throw DegreeError("component " + std::to_string(d) + " is not homogeneous of that degree: "
                          + f.to_string());
    if (f.is_zero())
        components_.erase(d);
    else
        components_[d] = std::move(f);
}

SymFn GradedSeries::sum() const
{
    SymFn total;
    for (const auto& [d, f] : components_)
        total = total + f;
    return total;
}

// ---------------------------------------------------------------------------

PowerSumSubstitution::PowerSumSubstitution(const SymFn& g, int cap)
    : inner_(to_basis(g, Basis::p)), cap_(cap)
{
}

const SymFn& PowerSumSubstitution::power(int j)
{
    if (auto it = powers_.find(j); it != powers_.end())
        return it->second;
    SymFn out(Basis::p);
    for (const auto& [mu, c] : inner_.terms()) {
        if (cap_ >= 0 && mu.weight() * j > cap_)
            continue;
        out.add_term(mu.scaled(j), c);
    }
    return powers_.emplace(j, std::move(out)).first->second;
}

const SymFn& PowerSumSubstitution::monomial(const Partition& lambda)
{
    if (auto it = monomials_.find(lambda); it != monomials_.end())
        return it->second;
    SymFn out;
    if (lambda.empty()) {
        out = SymFn::constant(1);
    } else {
        std::vector<int> rest(lambda.begin(), lambda.end() - 1);
        const SymFn& prefix = monomial(Partition(std::move(rest)));
        out = mul_truncated(prefix, power(lambda.parts().back()), cap_);
    }
    return monomials_.emplace(lambda, std::move(out)).first->second;
}

SymFn PowerSumSubstitution::apply(const SymFn& f)
{
    SymFn out(Basis::p);
    SymFn fp = to_basis(f, Basis::p);
    for (const auto& [lambda, c] : fp.terms())
        for (const auto& [mu, d] : monomial(lambda).terms())
            out.add_term(mu, c * d);
    return out;
}

SymFn plethysm(const SymFn& f, const SymFn& g)
{
    PowerSumSubstitution sub(g);
    return sub.apply(f);
}

GradedSeries plethysm_series(const GradedSeries& outer, const GradedSeries& inner, int degree_cap)
{
    if (degree_cap < 0)
        throw UsageError("degree cap must be nonnegative");
    if (!inner.component(0).is_zero())
        throw DegreeError("series plethysm needs an inner series with zero constant term");
    if (outer.truncation_degree() < degree_cap || inner.truncation_degree() < degree_cap)
        throw TruncationError("series plethysm to degree " + std::to_string(degree_cap)
                              + " needs both series known through that degree");

    SymFn g = inner.sum().truncated(degree_cap);
    SymFn f = outer.sum().truncated(degree_cap);
    PowerSumSubstitution sub(g, degree_cap);
    SymFn composed = sub.apply(f);

    GradedSeries out(degree_cap);
    for (int d = 0; d <= degree_cap; ++d)
        out.set_component(d, composed.homogeneous_part(d));
    return out;
}

SymFn fundamental(const SymFn& outer, const SymFn& paired, int r, FundamentalMode mode)
{
    if (r < 0)
        throw UsageError("fundamental: r must be nonnegative");
    auto k = outer.degree();
    if (!k)
        throw DegreeError("fundamental: F must be a nonzero homogeneous symmetric function, got "
                          + outer.to_string());
    if (!paired.is_zero() && paired.degree() != r * *k)
        throw DegreeError("fundamental: G must have degree r*deg(F) = " + std::to_string(r * *k)
                          + ", got " + paired.to_string());

    SymFn g = to_basis(paired, Basis::p);
    PowerSumSubstitution sub(outer);
    if (mode == FundamentalMode::power_sum) {
        SymFn out(Basis::p);
        for (const auto& lambda : partitions_of(r))
            out.add_term(lambda, scalar(sub.monomial(lambda), g) / z_of(lambda));
        return out;
    }
    SymFn out(Basis::s);
    for (const auto& lambda : partitions_of(r)) {
        SymFn composed = sub.apply(SymFn::generator(Basis::s, lambda));
        out.add_term(lambda, scalar(composed, g));
    }
    return out;
}

} // namespace symf
