#pragma once

// Brute-force and classical-formula checks. Nothing here calls the plethysm,
// scalar product, basis conversion, or character-table code it is used to verify;
// SymFn appears only as a container for p-basis coefficients.

#include "symf/partition.hpp"
#include "symf/rational.hpp"
#include "symf/symfn.hpp"

#include <map>

namespace symf::oracles {

/// Integer Laurent polynomial in one variable q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
    /// χ_k(q^step) = Σ_{j=0..k} q^{step·(k-2j)}, the SL(2) character of Sym^k at diag(q^step, q^-step).
    static LaurentPoly sl2_character(int k, int step = 1);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    Integer coefficient(int exponent) const;
    Integer constant_term() const { return coefficient(0); }
    const std::map<int, Integer>& terms() const noexcept { return terms_; }

private:
    void add(int exponent, const Integer& c);
    std::map<int, Integer> terms_;
};

enum class Outer { h, e };

/// Schur expansion of a[b] for a, b ∈ {h_i, e_j}, obtained by listing the monomials of
/// the plethysm in |a|·|b| variables and peeling off Kostka numbers counted from
/// semistandard tableaux.
std::map<Partition, Integer> plethysm_schur_by_monomials(Outer outer, int outer_degree, Outer inner, int inner_degree);

/// Kostka number K_λμ by counting semistandard tableaux.
Integer kostka(const Partition& shape, const Partition& content);

/// Deals of m copies of n card types into n hands of m cards, as multisets of hands. m·n ≤ 14.
Integer deals(int m, int n);

/// Same count via n×n matrices with entries in {0..m}, row and column sums m,
/// enumerated labelled and collapsed under row permutation. m·n ≤ 12.
Integer deals_by_matrices(int m, int n);

/// k-regular multigraphs on n vertices up to isomorphism (loops add 2). n ≤ 5, k ≤ 6.
Integer regular_graphs(int n, int k);

/// Frobenius character of S_r on Hom_{S_n}(⊗^r V, W) for V the permutation
/// representation and W trivial (sign_twist = false) or sign, by averaging over S_n.
/// n ≤ 5, r ≤ 8.
SymFn perm_hom_char(int n, int r, bool sign_twist);
inline SymFn perm_inv_char(int n, int r) { return perm_hom_char(n, r, false); }

/// Frobenius character of S_r on Hom_{S_n}(⊗^r P(V), W), where P is given by its
/// power-sum coefficients. n ≤ 4, r·deg P ≤ 8.
SymFn perm_hom_char_polyfunc(int n, const std::map<Partition, Rational>& functor_p, int r, bool sign_twist);
inline SymFn perm_inv_char_polyfunc(int n, const std::map<Partition, Rational>& functor_p, int r)
{
    return perm_hom_char_polyfunc(n, functor_p, r, false);
}

/// SL(2) invariants of ⊗^r Sym^k V: the character value at cycle type μ, as the
/// constant term of (1 - q²) ∏_c χ_k(q^{|c|}). k·r ≤ 36.
Rational su2_frobenius(int k, int r, const Partition& mu);
SymFn su2_inv_char(int k, int r);
/// Degree-r invariants of binary k-forms: the trivial-isotypic part of su2_inv_char.
Integer su2_symmetric_invariants(int k, int r);

/// N(k,r,kr/2) − N(k,r,kr/2−1), N counting partitions in an r×k box. 0 for kr odd. kr ≤ 60.
Integer cayley_sylvester(int k, int r);

/// Standard Young tableaux of shape λ by the hook-length formula. |λ| ≤ 30.
Integer syt(const Partition& lambda);
/// (2q−1)!!, the number of perfect matchings on 2q points.
Integer matchings(int q);
/// Set partitions of r elements into at most n blocks.
Integer restricted_bell(int r, int n);
Integer catalan(int m);

} // namespace symf::oracles
