#include "symf/invariants.hpp"

#include "symf/diagnostics.hpp"
#include "symf/errors.hpp"

#include <map>
#include <mutex>

namespace symf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw UsageError(std::string(what) + ": parameter n must be at least 1");
}

// Degree-r component of H_n[H_+], memoized per n at the largest truncation seen.
SymFn permutation_invariants(int n, int r)
{
    static std::mutex mutex;
    static std::map<int, GradedSeries> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end() && it->second.truncation_degree() >= r)
            return it->second.component(r);
    }
    int cap = r;
    SymFn outer_poly;
    for (int j = 0; j <= std::min(n, cap); ++j)
        outer_poly = outer_poly + SymFn::generator(Basis::h, Partition(j == 0 ? std::vector<int>{} : std::vector<int>{j}));
    SymFn inner_poly;
    for (int d = 1; d <= cap; ++d)
        inner_poly = inner_poly + SymFn::generator(Basis::h, {d});
    auto series = plethysm_series(GradedSeries::from_function(outer_poly, cap),
                                  GradedSeries::from_function(inner_poly, cap), cap);
    SymFn result = series.component(r);
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end() || it->second.truncation_degree() < cap)
        cache.insert_or_assign(n, std::move(series));
    return result;
}

} // namespace

std::string describe(const InvariantFamily& family)
{
    return std::visit(
        overloaded{
            [](const SLnDefining& f) { return "SL(" + std::to_string(f.n) + ") defining"; },
            [](const Sp2nDefining& f) { return "Sp(" + std::to_string(2 * f.n) + ") defining"; },
            [](const SnPermutation& f) { return "S(" + std::to_string(f.n) + ") permutation"; },
            [](const GLnAdjoint& f) {
                return "GL(" + std::to_string(f.n) + ") adjoint" + (f.stable ? " (stable)" : "");
            },
            [](const CustomFamily& f) {
                return "custom series to degree " + std::to_string(f.series.truncation_degree());
            },
        },
        family);
}

PolyFunctor::PolyFunctor(SymFn character) : character_(std::move(character)), degree_(0), genuine_(true)
{
    auto k = character_.degree();
    if (!k || *k < 1)
        throw DegreeError("a polynomial functor character must be nonzero and homogeneous of degree >= 1, got "
                          + character_.to_string());
    degree_ = *k;
    genuine_ = is_schur_positive_integral(character_);
    if (!genuine_)
        warn("functor character " + to_basis(character_, Basis::s).to_string()
             + " is not a nonnegative integral combination of Schur functions; treating it as virtual");
}

SymFn inv_char(const InvariantFamily& family, int r)
{
    if (r < 0)
        throw UsageError("inv_char: r must be nonnegative");
    return std::visit(
        overloaded{
            [r](const SLnDefining& f) {
                require_positive(f.n, "SL(n)");
                SymFn out(Basis::s);
                if (r % f.n == 0)
                    out.add_term(Partition::rectangle(r / f.n, f.n), 1);
                return out;
            },
            [r](const Sp2nDefining& f) {
                require_positive(f.n, "Sp(2n)");
                SymFn out(Basis::s);
                if (r % 2 != 0)
                    return out;
                for (const auto& lambda : partitions_of(r))
                    if (lambda.length() <= 2 * f.n && has_even_columns(lambda))
                        out.add_term(lambda, 1);
                return out;
            },
            [r](const SnPermutation& f) {
                require_positive(f.n, "S(n)");
                return permutation_invariants(f.n, r);
            },
            [r](const GLnAdjoint& f) {
                require_positive(f.n, "GL(n)");
                SymFn out(Basis::p);
                for (const auto& lambda : partitions_of(r)) {
                    if (!f.stable && lambda.length() > f.n)
                        continue;
                    const SymFn& s = power_sum_expansion(Basis::s, lambda);
                    out = out + kronecker(s, s);
                }
                return out;
            },
            [r](const CustomFamily& f) { return f.series.component(r); },
        },
        family);
}

SymFn inv_char_polyfunc(const InvariantFamily& family, const PolyFunctor& functor, int r)
{
    if (r < 0)
        throw UsageError("inv_char_polyfunc: r must be nonnegative");
    return fundamental(functor.character(), inv_char(family, r * functor.degree()), r);
}

Rational hilbert_dim(const InvariantFamily& family, const PolyFunctor& functor, int r)
{
    if (r < 0)
        throw UsageError("hilbert_dim: r must be nonnegative");
    SymFn outer = r == 0 ? SymFn::constant(1) : SymFn::generator(Basis::h, {r});
    Rational dim = scalar(plethysm(outer, functor.character()), inv_char(family, r * functor.degree()));
    if (!is_integer(dim)) {
        if (std::holds_alternative<CustomFamily>(family))
            warn("non-integral dimension " + to_string(dim) + " from a custom series");
        else
            throw InternalError("non-integral invariant dimension " + to_string(dim));
    }
    return dim;
}

SymFn hom_series_char(const GradedSeries& hom_series, const PolyFunctor& functor, int r)
{
    if (r < 0)
        throw UsageError("hom_series_char: r must be nonnegative");
    return fundamental(functor.character(), hom_series.component(r * functor.degree()), r);
}

Rational hom_dim(const SymFn& functor_char, const GradedSeries& hom_series)
{
    if (functor_char.is_zero())
        return 0;
    auto d = functor_char.degree();
    if (!d)
        throw DegreeError("hom_dim needs a homogeneous character, got " + functor_char.to_string());
    return scalar(functor_char, hom_series.component(*d));
}

GradedSeries invariant_series(const InvariantFamily& family, int truncation)
{
    GradedSeries out(truncation);
    for (int r = 0; r <= truncation; ++r)
        out.set_component(r, inv_char(family, r));
    return out;
}

} // namespace symf
