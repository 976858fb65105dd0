#pragma once

#include <utility>
#include <vector>

#include "unavoidable/tournament.hpp"

namespace unav {

// One recursive split: pivot v inside block W, arcs from the out-side into
// the in-side reversed, W replaced by [I, v, O] in the running order.
struct SplitStep {
    std::vector<int> block;                       // W, sorted
    int pivot = -1;
    std::vector<std::pair<int, int>> reversed;    // arcs (o, i) flipped to (i, o)
    std::vector<int> in_side;                     // I
    std::vector<int> out_side;                    // O
    long long block_triangles = 0;                // t(W)
};

struct TransitivizationResult {
    std::vector<int> order;                            // final vertex order
    std::vector<std::pair<int, int>> reversed_edges;   // arcs flipped (u,v) -> (v,u)
    double certified_bound = 0.0;                      // 27*sqrt(n*t) for the input
    long long triangles = 0;                           // t of the input
    std::vector<SplitStep> steps;
};

// Vertices of the induced subtournament on W with in- and outdegree at least
// |W|/6. Size is always more than |W|/3 - 2, asserted.
std::vector<int> balanced_core(const Tournament& t, const std::vector<int>& W);

// Vertex of C minimizing the cyclic-triple count through it inside the
// induced subtournament on W (ties: lowest index). The minimum is at most
// 3*t(W)/|C|, asserted.
int choose_pivot(const Tournament& t, const std::vector<int>& W, const std::vector<int>& C);

struct TransitivizeConfig {
    int base_floor = 12;     // blocks below this always go to the finisher
    int exact_finisher = 20; // exact subset-DP finisher up to this block size
    bool accounting = false; // verify the per-triangle weight telescoping
};

// Recursive pivot splitting with per-level reversal accounting, small-block
// finishing, and the certified reversal bound 27*sqrt(n*t).
TransitivizationResult transitivize(const Tournament& t, const TransitivizeConfig& cfg = {});

// Apply the recorded reversals to a copy of t.
Tournament apply_reversals(const Tournament& t, const std::vector<std::pair<int, int>>& reversals);

} // namespace unav
