#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoidable/coloring.hpp"
#include "unavoidable/ratio.hpp"

namespace unav {

// Parameters for the dependent-random-choice stage.
struct DrcConfig {
    double alpha = 0.0;  // per-color degree fraction each vertex of S clears
    double beta = 0.0;   // common-neighborhood fraction demanded of k-tuples
    int h = 2;           // sample size per side
    int k = 2;           // tuple size certified in the output set
    int trials = 64;
    uint64_t seed = 0;
};

struct StageRecord {
    std::string stage;
    std::string outcome;
    long long size = 0;
    std::string param;
};

struct FkSearchReport {
    std::optional<FkWitness> witness;
    std::vector<StageRecord> stage_log;
    bool exhausted = false;      // oracle fallback ran and proved absence
    bool fallback_used = false;
    bool sampled_certification = false; // k-subset check was sampled, not exhaustive
};

// Vertices with degree >= eps*n/4 in both colors (exact threshold compare).
// When both color densities are >= eps this set has size >= eps*n/2; that
// bound is asserted internally.
std::vector<int> bidegree_core(const ColoredCompleteGraph& g, const Ratio& eps);

// Repeated (U1, U2) sampling; W = N_R(U1) & N_B(U2) & S, one vertex deleted
// from every bad k-tuple (fewer than beta*n common neighbors in either
// color), best cleaned set over all trials returned. Every k-subset of the
// result has >= beta*n common neighbors in each color.
// `sampled_out`, if given, is set when the certification was sampled.
std::vector<int> dependent_random_choice(const ColoredCompleteGraph& g,
                                         const std::vector<int>& S,
                                         const DrcConfig& cfg,
                                         bool* sampled_out = nullptr);

// Exhaustive search for a pattern witness: ordered pairs of disjoint k-sets,
// both variants and colors, first hit in lexicographic order.
std::optional<FkWitness> fk_oracle(const ColoredCompleteGraph& g, int k,
                                   long long budget = 100'000'000);

struct FkConfig {
    int trials = 64;
    uint64_t seed = 0;
    bool fallback = true;
    long long fallback_budget = 100'000'000;
};

// Full pipeline: bidegree core -> dependent random choice -> clique in T ->
// clique in the opposite-color common neighborhood -> witness assembly.
// Throws std::invalid_argument when either color density is below eps.
FkSearchReport find_fk(const ColoredCompleteGraph& g, int k, const Ratio& eps,
                       const FkConfig& cfg = {});

struct LowerBoundRow {
    int trial = 0;
    uint64_t seed = 0;
    bool red_kk = false;             // red K_k present
    bool red_bipartite = false;      // red K_{k,k} (disjoint parts) present
    int fk_free = -1;                // 1 free / 0 not free / -1 oracle over budget
};

struct LowerBoundReport {
    std::vector<LowerBoundRow> rows;
    long long red_kk_count = 0;
    long long red_bipartite_count = 0;
    long long fk_free_count = 0;
    bool fk_checked = false;
};

// Random colorings with m = floor(eps*C(n,2)) red edges; per-trial exhaustive
// tests for a red K_k and a red K_{k,k}, plus F_k-freedom via the oracle
// when within budget.
LowerBoundReport lower_bound_experiment(int k, const Ratio& eps, int n,
                                        int trials, uint64_t seed,
                                        long long oracle_budget = 100'000'000);

} // namespace unav
