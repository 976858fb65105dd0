#pragma once

#include <optional>
#include <vector>

#include "unavoidable/coloring.hpp"
#include "unavoidable/tournament.hpp"

namespace unav {

struct CliqueWitness {
    std::vector<int> vertices; // sorted
    Color color = Color::Red;

    bool operator==(const CliqueWitness&) const = default;
};

struct TransitiveWitness {
    std::vector<int> vertices; // in transitive order

    bool operator==(const TransitiveWitness&) const = default;
};

bool verify_clique(const ColoredCompleteGraph& g, const CliqueWitness& w);
bool verify_transitive_witness(const Tournament& t, const TransitiveWitness& w);

// Greedy majority-color descent. Guaranteed to succeed when n >= 4^k;
// below that threshold it retries from every start vertex before giving up.
// Ties: red over blue, lowest pivot index.
std::optional<CliqueWitness> find_mono_clique(const ColoredCompleteGraph& g, int k);

// Exact maximum monochromatic clique in one color, branch and bound over
// bitset candidate sets. Budget n <= 32.
CliqueWitness max_mono_clique_exact(const ColoredCompleteGraph& g, Color c,
                                    int budget = 32);

// Greedy descent into the larger of out/in neighborhood. Guaranteed when
// n >= 2^(k-1); retries from every start vertex below the threshold.
// Ties: out-neighborhood over in, lowest pivot index.
std::optional<TransitiveWitness> find_transitive_subtournament(const Tournament& t, int k);

// Exact maximum transitive subtournament by subset DP. Budget n <= 20.
TransitiveWitness max_transitive_exact(const Tournament& t, int budget = 20);

} // namespace unav
