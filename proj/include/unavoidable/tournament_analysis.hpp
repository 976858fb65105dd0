#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unavoidable/ratio.hpp"
#include "unavoidable/tournament.hpp"

namespace unav {

struct FarnessReport {
    enum class Method { Exact, LowerBound, UpperBound };
    long long distance = 0;     // edge reversals
    Ratio epsilon_far{0, 1};    // distance / n^2
    Method method = Method::Exact;
    std::vector<int> order;     // witnessing vertex order (exact/upper-bound)
};

// Number of cyclic triples, via the degree identity
// C(n,3) - sum_v C(outdeg(v),2).
long long count_directed_triangles(const Tournament& t);
// Same count by explicit bitset enumeration of triples.
long long count_directed_triangles_enum(const Tournament& t);

// Cyclic triples through v = arcs from out-neighborhood of v into its
// in-neighborhood.
long long triangles_through_vertex(const Tournament& t, int v);

// Minimum reversals over all vertex orders, subset DP (prefix-placement;
// cost of appending v after prefix S is |{u in S : v->u}|). Reversing
// exactly the backward edges of the best order is optimal: any reversal set
// that makes the tournament transitive induces an order whose backward
// edges in the original are precisely the reversed ones, so the minimum
// over orders of backward-edge count is the minimum number of reversals.
// Budget n <= 20.
FarnessReport transitivity_distance_exact(const Tournament& t, int budget = 20);

// Greedy maximal edge-disjoint packing of cyclic triangles; triples scanned
// in lexicographic order after an optional seeded shuffle (seed 0 = no
// shuffle). Packing size is a distance lower bound.
long long packing_lower_bound(const Tournament& t, uint64_t seed = 0);

// Iterated outdegree order: repeatedly place the vertex of maximum outdegree
// in the remaining subtournament (ties by index). Backward-edge count is at
// most C(n,2)/2, asserted.
FarnessReport upper_bound_distance(const Tournament& t);

} // namespace unav
