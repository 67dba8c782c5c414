#pragma once

#include "symf/symfn.hpp"

#include <map>

namespace symf {

/// Homogeneous components 0..truncation_degree of a formal series of symmetric
/// functions. Components above the truncation degree are unknown, not zero.
class GradedSeries {
public:
    explicit GradedSeries(int truncation_degree);
    /// Splits a finite symmetric function into components, keeping degrees ≤ truncation_degree.
    static GradedSeries from_function(const SymFn& f, int truncation_degree);

    int truncation_degree() const noexcept { return truncation_; }
    /// Throws TruncationError if d exceeds the truncation degree.
    SymFn component(int d) const;
    /// Throws DegreeError unless f is zero or homogeneous of degree d.
    void set_component(int d, SymFn f);
    /// All known components summed into one symmetric function.
    SymFn sum() const;

private:
    int truncation_;
    std::map<int, SymFn> components_;
};

/// Caches p_j[g] and p_λ[g] for a fixed inner function g, optionally dropping
/// every term above degree `cap` (cap < 0 keeps everything).
class PowerSumSubstitution {
public:
    explicit PowerSumSubstitution(const SymFn& g, int cap = -1);

    const SymFn& power(int j);
    const SymFn& monomial(const Partition& lambda);
    /// f[g] for f in any basis.
    SymFn apply(const SymFn& f);

private:
    SymFn inner_;
    int cap_;
    std::map<int, SymFn> powers_;
    std::map<Partition, SymFn> monomials_;
};

/// f[g], determined by p_n[g] = g(p_k ↦ p_nk) with scalars fixed.
SymFn plethysm(const SymFn& f, const SymFn& g);

/// Components 0..degree_cap of F[G]. G must have zero constant term and both
/// series must be known through degree_cap.
GradedSeries plethysm_series(const GradedSeries& outer, const GradedSeries& inner, int degree_cap);

enum class FundamentalMode { power_sum, schur };

/// ⟨h_r[X·F[Y]], G[Y]⟩_Y for F homogeneous of degree k and G of degree r·k.
/// Power-sum mode sums (1/z_λ)⟨p_λ[F], G⟩ p_λ; Schur mode sums ⟨s_λ[F], G⟩ s_λ.
SymFn fundamental(const SymFn& outer, const SymFn& paired, int r,
                  FundamentalMode mode = FundamentalMode::power_sum);

} // namespace symf
