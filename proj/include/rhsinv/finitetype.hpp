#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rhsinv/surgery.hpp"

namespace rhsinv::finitetype {

// Connected trivalent multigraph: each vertex is a (nonzero) triple Milnor
// label (i,j,k) in its stored slot order, each link component appears as at
// most one edge and joins the two vertex slots carrying its index. For the
// S_n contribution: 2n vertices, 3n edges, n+1 loops, no bridge edge (1PI).
struct Diagram {
    std::vector<std::array<int, 3>> vertices;

    int edge_count() const;
    std::vector<int> edge_labels() const;  // sorted distinct component labels
};

// sum over sublinks L' of L of (-1)^{#L'} S_n(chi_{L'}(M)); the empty sublink
// contributes +S_n(M).
Rational alternating_sum_sublinks(const surgery::SurgeryPresentation& sp, int n);

// Alternating sums over the 2^n surgeries (p, q + sum mu_j), mu_j = +-1, on a
// knot grid with zero framing, weighted by prod mu_j. The S-level sum takes
// S_{n'} of each surgered manifold; the Delta-level sum takes the series
// coefficient Delta_{n'} instead. Every shifted coefficient must be a valid
// slope: q + sum mu != 0 and coprime to p.
Rational surgery_shift_alternating_sum(const jones::JonesGrid& knot, long long p, long long q,
                                       int n, int n_prime);
Rational surgery_shift_alternating_sum_delta(const jones::JonesGrid& knot, long long p,
                                             long long q, int n, int n_prime);

// All diagrams contributing to S_n for the given triple Milnor data:
// multisets of 2n nonzero-mu triples in which every participating component
// index appears exactly twice, connected and bridgeless. The participating
// triples determine the diagram.
std::vector<Diagram> enumerate_diagrams(const jones::MilnorData& milnor, int n);

// Group weight: one epsilon_{abc} per vertex with indices in the stored slot
// order, contracted pairwise along edges, summed over assignments in {1,2,3}.
// Even vertex-label permutations preserve it; odd ones flip the sign.
long long diagram_weight(const Diagram& d);

// Diagrammatic evaluation of the alternating sum for a 3n-component ASL:
//   (-4)^n * 1/(1+delta_{n,1}) * prod_j q_j/P_j
//   * sum_dgr W_dgr prod_{(i,j,k) in V_dgr} mu_ijk.
// The vertex sign convention (sorted labels) makes this equal to
// alternating_sum_sublinks on the Borromean benchmark.
Rational diagram_sum(const surgery::SurgeryPresentation& sp, int n);

struct DiagramReport {
    int order = 0;
    Rational alternating_sum;
    Rational diagram_value;
    std::vector<Diagram> diagrams;
    std::vector<long long> weights;
    bool match = false;
};

DiagramReport two_path_report(const surgery::SurgeryPresentation& sp, int n);

}  // namespace rhsinv::finitetype
