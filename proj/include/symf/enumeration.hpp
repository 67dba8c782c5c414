#pragma once

#include "symf/symfn.hpp"

namespace symf {

/// m identical copies of each of n card types, dealt into n unordered hands of m cards.
struct DealSpec {
    int m;
    int n;
};

/// k-regular multigraphs on n vertices; loops count 2 towards the valency.
struct RegularGraphSpec {
    int n;
    int k;
};

/// Number of deals, ⟨h_n[h_m], h_m^n⟩.
Rational card_deals(const DealSpec& spec);

/// ⟨h_n[X·h_m[Y]], h_m^n[Y]⟩_Y: the Frobenius character of S_n permuting the hands.
SymFn deals_cycle_index(const DealSpec& spec);

/// Number of k-regular multigraphs, ⟨h_n[h_k], h_{nk/2}[h_2]⟩; zero when nk is odd.
Rational regular_graphs(const RegularGraphSpec& spec);

/// ⟨h_n[X·h_k[Y]], h_{nk/2}[h_2[Y]]⟩_Y. Throws DegreeError when nk is odd.
SymFn regular_graphs_cycle_index(const RegularGraphSpec& spec);

} // namespace symf
