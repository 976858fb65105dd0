#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoidable/fk.hpp" // StageRecord
#include "unavoidable/ratio.hpp"
#include "unavoidable/tournament.hpp"

namespace unav {

struct Tripartition {
    std::vector<int> v0, v1, v2;              // disjoint, sizes within 1 of n/3
    long long positively_oriented_count = 0;  // cyclic (a,b,c) with arc b->c
    bool cleared_t_over_9 = false;            // best count >= ceil(t/9)
};

struct BipartiteGraph {
    std::vector<int> left, right;   // global vertex labels (right may be index set)
    std::vector<Bitset> adj;        // adj[i] = right-indices adjacent to left[i]

    long long edge_count() const {
        long long e = 0;
        for (const auto& row : adj) e += row.count();
        return e;
    }
};

// Count positively oriented cyclic triples (a,b,c) in v0 x v1 x v2:
// a->b, b->c, c->a all present.
long long positively_oriented_count(const Tournament& t, const std::vector<int>& v0,
                                    const std::vector<int>& v1, const std::vector<int>& v2);

// Best of `trials` uniform balanced tripartitions by positively oriented
// count. Sizes floor/ceil of n/3, remainder round-robin.
Tripartition best_tripartition(const Tournament& t, int trials, uint64_t seed);

// Auxiliary bipartite graph H on (v1, v2): edge (b,c) iff arc b->c exists and
// at least delta*n/2 vertices of v0 complete it to a positively oriented
// triangle. Every H-edge implies the arc b->c, asserted.
BipartiteGraph build_h(const Tournament& t, const Tripartition& p, const Ratio& delta);

struct BipartiteDrcConfig {
    int d = 2;         // tuple size certified
    int hh = 4;        // sample size
    double beta = 0.0; // common-neighborhood fraction of |right|
    int trials = 64;
    uint64_t seed = 0;
};

// One-sided dependent random choice on a bipartite graph: sample hh right
// vertices with repetition, take the common left-neighborhood, delete a
// vertex from every bad d-tuple; best cleaned set over trials. Returned as
// indices into h.left.
std::vector<int> bipartite_drc(const BipartiteGraph& h, const BipartiteDrcConfig& cfg,
                               bool* sampled_out = nullptr);

// First (lexicographic) complete bipartite K_{s,tt}: tt-subsets of the right
// side enumerated, left neighborhoods intersected. Returns (left-index set,
// right-index set).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
zarankiewicz_extract(const BipartiteGraph& f, int s, int tt, long long budget = 1'000'000);

// Kovari-Sos-Turan style edge threshold (s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1)m.
double zar_bound(long long m, long long n, int s, int t);

struct DkConfig {
    int d_cap = 8;
    int x0_size = 0;      // 0 = default k
    int tripartition_trials = 32;
    int drc_trials = 64;
    int retries = 16;
    uint64_t seed = 0;
    bool fallback = true;
    long long fallback_budget = 50'000'000;
};

struct DkSearchReport {
    std::optional<DkWitness> witness;
    std::vector<StageRecord> stage_log;
    bool fallback_used = false;
    bool exhausted = false; // oracle ran and proved absence
    std::string reason;     // not-found / stage-failed / hypothesis-too-small / ...
};

// Full pipeline: tripartition -> H -> bipartite DRC -> transitive X1 ->
// transitive X2 in N_H(X1) -> bipartite F on v0 x {1..d} -> Zarankiewicz
// extraction -> transitive U0 -> witness assembly.
DkSearchReport find_dk(const Tournament& t, int k, const DkConfig& cfg = {});

// Exhaustive search over ordered triples of disjoint k-sets; first witness in
// lexicographic order, exact within budget.
std::optional<DkWitness> dk_oracle(const Tournament& t, int k,
                                   long long budget = 50'000'000);

} // namespace unav
