#pragma once

#include "symf/functor.hpp"
#include "symf/plethysm.hpp"
#include "symf/symfn.hpp"

#include <string>
#include <variant>

namespace symf {

/// Defining representation of SL(n).
struct SLnDefining {
    int n;
};

/// Defining representation of Sp(2n).
struct Sp2nDefining {
    int n;
};

/// Permutation representation of S_n on n points.
struct SnPermutation {
    int n;
};

/// Adjoint representation of GL(n). The stable form sums over every λ ⊢ r;
/// `stable = false` keeps only ℓ(λ) ≤ n, which is exact for every n.
struct GLnAdjoint {
    int n;
    bool stable = true;
};

/// User-supplied invariant characters r ↦ I_r(V).
struct CustomFamily {
    GradedSeries series;
};

using InvariantFamily = std::variant<SLnDefining, Sp2nDefining, SnPermutation, GLnAdjoint, CustomFamily>;

std::string describe(const InvariantFamily& family);

/// A homogeneous polynomial functor of degree k ≥ 1, known through its character.
class PolyFunctor {
public:
    /// Throws DegreeError unless the character is nonzero homogeneous of degree ≥ 1.
    /// A character that is not a nonnegative integral combination of Schur functions
    /// is accepted as a virtual functor with a warning.
    explicit PolyFunctor(SymFn character);

    static PolyFunctor identity() { return PolyFunctor(SymFn::generator(Basis::p, {1})); }
    static PolyFunctor symmetric_power(int k) { return PolyFunctor(SymFn::generator(Basis::h, {k})); }
    static PolyFunctor exterior_power(int k) { return PolyFunctor(SymFn::generator(Basis::e, {k})); }
    static PolyFunctor schur(const Partition& lambda) { return PolyFunctor(schur_functor_char(lambda)); }
    static PolyFunctor from_rep(const RepCharacter& rho) { return PolyFunctor(char_of_functor(rho)); }

    const SymFn& character() const noexcept { return character_; }
    int degree() const noexcept { return degree_; }
    bool is_genuine() const noexcept { return genuine_; }

private:
    SymFn character_;
    int degree_;
    bool genuine_;
};

/// Frobenius character I_r(V) of the S_r-action on the invariants of ⊗^r V.
SymFn inv_char(const InvariantFamily& family, int r);

/// I_r(P(V)) = ⟨h_r[X·ch P[Y]], I_rk(V)[Y]⟩_Y.
SymFn inv_char_polyfunc(const InvariantFamily& family, const PolyFunctor& functor, int r);

/// Dimension of degree-r invariant polynomials on P(V): ⟨h_r[ch P], I_rk(V)⟩.
Rational hilbert_dim(const InvariantFamily& family, const PolyFunctor& functor, int r);

/// ch Hom_G(⊗^r P(V), W) from the series J_d = ch Hom_G(⊗^d V, W).
SymFn hom_series_char(const GradedSeries& hom_series, const PolyFunctor& functor, int r);

/// dim Hom_G(P(V), W) = ⟨ch P, J_d⟩ for ch P of degree d.
Rational hom_dim(const SymFn& functor_char, const GradedSeries& hom_series);

/// r ↦ I_r(V) for r = 0..truncation.
GradedSeries invariant_series(const InvariantFamily& family, int truncation);

} // namespace symf
