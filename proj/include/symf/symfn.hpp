#pragma once

#include "symf/partition.hpp"
#include "symf/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace symf {

enum class Basis { p, h, e, m, s };

char basis_letter(Basis b);
/// Accepts "p", "h", "e", "m", "s"; throws UsageError otherwise.
Basis parse_basis(std::string_view text);

/// A symmetric function with exact rational coefficients, stored sparsely in one
/// of the five classical bases. Terms are ordered by degree, then reverse
/// lexicographically. Zero coefficients are never stored. Equality compares the
/// underlying element, whatever the bases involved.
class SymFn {
public:
    using Terms = std::map<Partition, Rational>;

    SymFn() = default;
    explicit SymFn(Basis basis) : basis_(basis) {}
    SymFn(Basis basis, Terms terms);

    static SymFn constant(const Rational& c);
    /// b_λ; for p, h, e this is the product b_{λ1} b_{λ2} ⋯.
    static SymFn generator(Basis basis, const Partition& lambda);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Adds c·b_λ in this function's basis.
    void add_term(const Partition& lambda, const Rational& c);
    Rational coefficient(const Partition& lambda) const;

    /// Degree of a nonzero homogeneous function; nullopt for zero or mixed degrees.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    /// Largest degree present, or -1 for zero.
    int max_degree() const;
    int min_degree() const;
    SymFn homogeneous_part(int d) const;
    /// Drops every component above degree `d`.
    SymFn truncated(int d) const;
    Rational constant_term() const;

    /// Plain-text rendering, e.g. "4/3*s[2,1] - s[3]" or "0".
    std::string to_string() const;

    bool operator==(const SymFn& other) const;

private:
    Basis basis_ = Basis::p;
    Terms terms_;
};

SymFn to_basis(const SymFn& f, Basis target);

SymFn operator+(const SymFn& f, const SymFn& g);
SymFn operator-(const SymFn& f, const SymFn& g);
SymFn operator-(const SymFn& f);
SymFn operator*(const Rational& c, const SymFn& f);
/// Ring product, computed in the power-sum basis.
SymFn operator*(const SymFn& f, const SymFn& g);

inline SymFn add(const SymFn& f, const SymFn& g) { return f + g; }
inline SymFn mul(const SymFn& f, const SymFn& g) { return f * g; }
inline SymFn scale(const Rational& c, const SymFn& f) { return c * f; }

/// Product dropping every term above degree `cap`.
SymFn mul_truncated(const SymFn& f, const SymFn& g, int cap);
SymFn power(const SymFn& f, int exponent);

/// Hall inner product; components of different degree are orthogonal.
Rational scalar(const SymFn& f, const SymFn& g);
/// Internal (Kronecker) product: p_λ ∗ p_μ = δ_λμ z_λ p_λ.
SymFn kronecker(const SymFn& f, const SymFn& g);
/// Coefficient of m_λ in f, computed as ⟨f, h_λ⟩.
Rational monomial_coefficient(const SymFn& f, const Partition& lambda);
/// ⟨f, p_1^r⟩ for homogeneous f of degree r; zero maps to zero. Throws DegreeError on mixed degrees.
Rational dimension(const SymFn& f);
/// Sum of p-basis coefficients (every p_i set to 1).
Rational specialize_ones(const SymFn& f);
/// Involution ω: p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ.
SymFn omega(const SymFn& f);

/// True iff every Schur coefficient is a nonnegative integer.
bool is_schur_positive_integral(const SymFn& f);

/// Power-sum expansion of a single basis element b_λ (memoized per degree).
const SymFn& power_sum_expansion(Basis basis, const Partition& lambda);

} // namespace symf
