#include "symf/symfn.hpp"

#include "symf/character_table.hpp"
#include "symf/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace symf {

char basis_letter(Basis b)
{
    switch (b) {
    case Basis::p: return 'p';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::m: return 'm';
    case Basis::s: return 's';
    }
    return '?';
}

Basis parse_basis(std::string_view text)
{
    if (text.size() == 1) {
        switch (text[0]) {
        case 'p': return Basis::p;
        case 'h': return Basis::h;
        case 'e': return Basis::e;
        case 'm': return Basis::m;
        case 's': return Basis::s;
        default: break;
        }
    }
    throw UsageError("unknown basis '" + std::string(text) + "' (expected p, h, e, m or s)");
}

SymFn::SymFn(Basis basis, Terms terms) : basis_(basis)
{
    for (auto& [lambda, c] : terms)
        if (c != 0)
            terms_.emplace(lambda, std::move(c));
}

SymFn SymFn::constant(const Rational& c)
{
    SymFn f(Basis::p);
    f.add_term(Partition{}, c);
    return f;
}

SymFn SymFn::generator(Basis basis, const Partition& lambda)
{
    SymFn f(basis);
    f.terms_.emplace(lambda, Rational(1));
    return f;
}

void SymFn::add_term(const Partition& lambda, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational SymFn::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SymFn::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.weight();
}

bool SymFn::is_homogeneous() const
{
    return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

int SymFn::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

int SymFn::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

SymFn SymFn::homogeneous_part(int d) const
{
    SymFn out(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.weight() == d)
            out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    return out;
}

SymFn SymFn::truncated(int d) const
{
    SymFn out(basis_);
    for (const auto& [lambda, c] : terms_) {
        if (lambda.weight() > d)
            break;
        out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    }
    return out;
}

Rational SymFn::constant_term() const { return coefficient(Partition{}); }

std::string SymFn::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        bool negative = c < 0;
        Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string atom = lambda.empty() ? "" : std::string(1, basis_letter(basis_)) + lambda.to_string();
        if (atom.empty())
            out += symf::to_string(magnitude);
        else if (magnitude == 1)
            out += atom;
        else
            out += symf::to_string(magnitude) + "*" + atom;
    }
    return out;
}

bool SymFn::operator==(const SymFn& other) const
{
    if (basis_ == other.basis_)
        return terms_ == other.terms_;
    return to_basis(*this, Basis::p).terms_ == to_basis(other, Basis::p).terms_;
}

// ---------------------------------------------------------------------------
// Per-degree transition data

namespace {

SymFn multiply_p(const SymFn& f, const SymFn& g, int cap)
{
    SymFn out(Basis::p);
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            if (cap >= 0 && a.weight() + b.weight() > cap)
                continue;
            out.add_term(a.join(b), ca * cb);
        }
    return out;
}

// h_n = Σ_μ p_μ / z_μ and e_n = Σ_μ ε_μ p_μ / z_μ
SymFn single_part_expansion(Basis basis, int n)
{
    SymFn out(Basis::p);
    for (const auto& mu : partitions_of(n)) {
        Rational c(Integer(1), z_of(mu));
        if (basis == Basis::e && (n - mu.length()) % 2 != 0)
            c = -c;
        out.add_term(mu, c);
    }
    return out;
}

// Coefficient of x^λ in p_μ: ways to distribute the parts of μ into the rows of λ exactly.
// The count only depends on the multiset of remaining row capacities, which is memoized.
long long monomial_count(const Partition& mu, const Partition& lambda)
{
    const auto& parts = mu.parts();
    std::map<std::vector<int>, long long> memo;
    auto rec = [&](auto&& self, std::size_t i, std::vector<int> room) -> long long {
        if (i == parts.size())
            return 1;
        std::sort(room.begin(), room.end(), std::greater<>());
        room.push_back(static_cast<int>(i));
        if (auto it = memo.find(room); it != memo.end())
            return it->second;
        std::vector<int> key = room;
        room.pop_back();
        long long total = 0;
        for (auto& r : room) {
            if (r >= parts[i]) {
                r -= parts[i];
                total += self(self, i + 1, room);
                r += parts[i];
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, 0, std::vector<int>(lambda.begin(), lambda.end()));
}

struct DegreeData {
    explicit DegreeData(int n) : partitions(partitions_of(n))
    {
        for (std::size_t i = 0; i < partitions.size(); ++i)
            index.emplace(partitions[i], i);
    }

    std::vector<Partition> partitions;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;
    std::array<std::vector<SymFn>, 5> expansions;
};

class TransitionStore {
public:
    const std::vector<SymFn>& expansions(Basis basis, int n)
    {
        std::lock_guard lock(mutex_);
        auto& slot = degrees_[n];
        if (!slot)
            slot = std::make_unique<DegreeData>(n);
        auto& exp = slot->expansions[static_cast<std::size_t>(basis)];
        if (exp.empty())
            exp = build(basis, *slot);
        return exp;
    }

    std::size_t index_of(const Partition& lambda)
    {
        expansions(Basis::p, lambda.weight());
        std::lock_guard lock(mutex_);
        return degrees_[lambda.weight()]->index.at(lambda);
    }

private:
    static std::vector<SymFn> build(Basis basis, const DegreeData& data)
    {
        std::vector<SymFn> out;
        out.reserve(data.partitions.size());
        switch (basis) {
        case Basis::p:
            for (const auto& lambda : data.partitions)
                out.push_back(SymFn::generator(Basis::p, lambda));
            break;
        case Basis::h:
        case Basis::e: {
            std::unordered_map<int, SymFn> singles;
            for (const auto& lambda : data.partitions) {
                SymFn prod = SymFn::constant(1);
                for (int part : lambda) {
                    auto it = singles.find(part);
                    if (it == singles.end())
                        it = singles.emplace(part, single_part_expansion(basis, part)).first;
                    prod = multiply_p(prod, it->second, -1);
                }
                out.push_back(std::move(prod));
            }
            break;
        }
        case Basis::s: {
            auto table = character_table(data.partitions.empty() ? 0 : data.partitions[0].weight());
            const auto& mus = table->partitions();
            std::vector<Integer> z;
            for (const auto& mu : mus)
                z.push_back(z_of(mu));
            for (std::size_t row = 0; row < table->size(); ++row) {
                SymFn f(Basis::p);
                for (std::size_t col = 0; col < mus.size(); ++col)
                    if (auto v = table->at(row, col); v != 0)
                        f.add_term(mus[col], ratio(static_cast<long>(v), z[col]));
                out.push_back(std::move(f));
            }
            break;
        }
        case Basis::m: {
            // p_μ = Σ_{λ ≥ μ} L_μλ m_λ is triangular in canonical order; solve downward.
            const auto& parts = data.partitions;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                SymFn f = SymFn::generator(Basis::p, parts[i]);
                for (std::size_t j = 0; j < i; ++j) {
                    long long l = monomial_count(parts[i], parts[j]);
                    if (l != 0)
                        f = f - Rational(static_cast<long>(l)) * out[j];
                }
                long long diag = monomial_count(parts[i], parts[i]);
                out.push_back(Rational(1, static_cast<unsigned long>(diag)) * f);
            }
            break;
        }
        }
        return out;
    }

    std::recursive_mutex mutex_;
    std::map<int, std::unique_ptr<DegreeData>> degrees_;
};

TransitionStore& transitions()
{
    static TransitionStore store;
    return store;
}

Rational scalar_p(const SymFn& f, const SymFn& g)
{
    const SymFn& small = f.term_count() <= g.term_count() ? f : g;
    const SymFn& large = f.term_count() <= g.term_count() ? g : f;
    Rational total = 0;
    for (const auto& [lambda, c] : small.terms()) {
        auto it = large.terms().find(lambda);
        if (it != large.terms().end())
            total += c * it->second * z_of(lambda);
    }
    return total;
}

const SymFn& dual_expansion(Basis basis, const Partition& lambda, std::vector<SymFn>& omega_scratch)
{
    switch (basis) {
    case Basis::p: return power_sum_expansion(Basis::p, lambda);
    case Basis::s: return power_sum_expansion(Basis::s, lambda);
    case Basis::h: return power_sum_expansion(Basis::m, lambda);
    case Basis::m: return power_sum_expansion(Basis::h, lambda);
    case Basis::e:
        omega_scratch.push_back(omega(power_sum_expansion(Basis::m, lambda)));
        return omega_scratch.back();
    }
    throw InternalError("unreachable basis");
}

SymFn as_p(const SymFn& f) { return f.basis() == Basis::p ? f : to_basis(f, Basis::p); }

} // namespace

const SymFn& power_sum_expansion(Basis basis, const Partition& lambda)
{
    const auto& exp = transitions().expansions(basis, lambda.weight());
    return exp[transitions().index_of(lambda)];
}

SymFn to_basis(const SymFn& f, Basis target)
{
    if (f.basis() == target)
        return f;
    SymFn in_p(Basis::p);
    if (f.basis() == Basis::p) {
        in_p = f;
    } else {
        for (const auto& [lambda, c] : f.terms())
            for (const auto& [mu, d] : power_sum_expansion(f.basis(), lambda).terms())
                in_p.add_term(mu, c * d);
    }
    if (target == Basis::p)
        return in_p;

    // The coefficient of b_λ is the scalar product with the dual basis element.
    SymFn out(target);
    for (int d = in_p.min_degree(); d >= 0 && d <= in_p.max_degree(); ++d) {
        SymFn part = in_p.homogeneous_part(d);
        if (part.is_zero())
            continue;
        std::vector<SymFn> scratch;
        scratch.reserve(partition_count(d).get_ui());
        for (const auto& lambda : partitions_of(d)) {
            out.add_term(lambda, scalar_p(part, dual_expansion(target, lambda, scratch)));
        }
    }
    return out;
}

SymFn operator+(const SymFn& f, const SymFn& g)
{
    if (f.basis() != g.basis())
        return as_p(f) + as_p(g);
    SymFn out = f;
    for (const auto& [lambda, c] : g.terms())
        out.add_term(lambda, c);
    return out;
}

SymFn operator-(const SymFn& f) { return Rational(-1) * f; }

SymFn operator-(const SymFn& f, const SymFn& g) { return f + (-g); }

SymFn operator*(const Rational& c, const SymFn& f)
{
    SymFn out(f.basis());
    if (c == 0)
        return out;
    for (const auto& [lambda, d] : f.terms())
        out.add_term(lambda, c * d);
    return out;
}

SymFn operator*(const SymFn& f, const SymFn& g) { return multiply_p(as_p(f), as_p(g), -1); }

SymFn mul_truncated(const SymFn& f, const SymFn& g, int cap) { return multiply_p(as_p(f), as_p(g), cap); }

SymFn power(const SymFn& f, int exponent)
{
    if (exponent < 0)
        throw UsageError("negative exponent");
    SymFn result = SymFn::constant(1);
    SymFn base = as_p(f);
    while (exponent > 0) {
        if (exponent & 1)
            result = multiply_p(result, base, -1);
        exponent >>= 1;
        if (exponent)
            base = multiply_p(base, base, -1);
    }
    return result;
}

Rational scalar(const SymFn& f, const SymFn& g)
{
    if (f.basis() == Basis::s && g.basis() == Basis::s) {
        Rational total = 0;
        for (const auto& [lambda, c] : f.terms())
            total += c * g.coefficient(lambda);
        return total;
    }
    if (f.basis() == Basis::s || g.basis() == Basis::s) {
        // ⟨p_μ, s_λ⟩ = χ^λ_μ: avoids a full character table at high degree.
        const SymFn& schur = f.basis() == Basis::s ? f : g;
        SymFn other = as_p(f.basis() == Basis::s ? g : f);
        Rational total = 0;
        for (const auto& [lambda, c] : schur.terms())
            for (const auto& [mu, d] : other.terms())
                if (mu.weight() == lambda.weight())
                    total += c * d * character_value(lambda, mu);
        return total;
    }
    return scalar_p(as_p(f), as_p(g));
}

SymFn kronecker(const SymFn& f, const SymFn& g)
{
    SymFn fp = as_p(f);
    SymFn gp = as_p(g);
    SymFn out(Basis::p);
    for (const auto& [lambda, c] : fp.terms()) {
        auto it = gp.terms().find(lambda);
        if (it != gp.terms().end())
            out.add_term(lambda, c * it->second * z_of(lambda));
    }
    return out;
}

Rational monomial_coefficient(const SymFn& f, const Partition& lambda)
{
    return scalar_p(as_p(f), power_sum_expansion(Basis::h, lambda));
}

Rational dimension(const SymFn& f)
{
    if (f.is_zero())
        return 0;
    auto d = f.degree();
    if (!d)
        throw DegreeError("dimension requires a homogeneous symmetric function, got " + f.to_string());
    SymFn fp = as_p(f);
    return fp.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(*d), 1))) * factorial(static_cast<unsigned>(*d));
}

Rational specialize_ones(const SymFn& f)
{
    SymFn fp = as_p(f);
    Rational total = 0;
    for (const auto& [lambda, c] : fp.terms())
        total += c;
    return total;
}

SymFn omega(const SymFn& f)
{
    SymFn fp = as_p(f);
    SymFn out(Basis::p);
    for (const auto& [lambda, c] : fp.terms())
        out.add_term(lambda, (lambda.weight() - lambda.length()) % 2 == 0 ? c : Rational(-c));
    return out;
}

bool is_schur_positive_integral(const SymFn& f)
{
    SymFn fs = to_basis(f, Basis::s);
    for (const auto& [lambda, c] : fs.terms())
        if (c < 0 || !is_integer(c))
            return false;
    return true;
}

} // namespace symf
