#pragma once

#include "symf/character_table.hpp"
#include "symf/symfn.hpp"

#include <cstdint>
#include <map>

namespace symf {

/// A class function on S_r: the trace of ρ(π) recorded per cycle type of π.
class RepCharacter {
public:
    /// Throws UsageError if a key is not a partition of r. Missing classes have trace 0.
    RepCharacter(int r, std::map<Partition, std::int64_t> traces);

    static RepCharacter trivial(int r);
    static RepCharacter sign(int r);
    static RepCharacter regular(int r);
    /// Row λ of the character table.
    static RepCharacter irreducible(const Partition& lambda);

    int degree() const noexcept { return degree_; }
    std::int64_t trace(const Partition& cycle_type) const;
    /// Trace at the identity.
    std::int64_t dimension() const;
    const std::map<Partition, std::int64_t>& traces() const noexcept { return traces_; }

    RepCharacter operator+(const RepCharacter& other) const;

private:
    int degree_;
    std::map<Partition, std::int64_t> traces_;
};

/// Character of the polynomial functor attached to ρ: Σ_μ (Tr ρ(μ) / z_μ) p_μ.
SymFn char_of_functor(const RepCharacter& rho);

/// Character of the Schur functor S^λ, which is s_λ.
SymFn schur_functor_char(const Partition& lambda);

} // namespace symf
