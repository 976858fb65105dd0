#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unavoidable/bitset.hpp"

namespace unav {

// Orientation of the complete graph on n labeled vertices. out_[v] is the
// bit row of out-neighbors; exactly one of u->v, v->u holds per pair.
class Tournament {
public:
    explicit Tournament(int n);

    int n() const { return n_; }

    bool arc(int u, int v) const { return out_[u].test(v); } // true iff u -> v
    void orient(int u, int v);                               // set u -> v

    const Bitset& out_row(int v) const { return out_[v]; }
    const Bitset& in_row(int v) const { return in_[v]; }

    int outdeg(int v) const { return out_[v].count(); }
    int indeg(int v) const { return in_[v].count(); }

    bool operator==(const Tournament& o) const = default;

private:
    void check_pair(int u, int v) const;

    int n_;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
};

// Three disjoint transitive k-blocks with the cyclic between-block rule
// u0 -> u1 -> u2 -> u0. Each u_i is listed in its transitive order.
struct DkWitness {
    std::vector<int> u0, u1, u2;

    bool operator==(const DkWitness&) const = default;
};

// D_k: three transitive blocks of size k, block-major labels, cyclic arcs
// between blocks.
Tournament make_dk(int k);
// d stacked copies of D_k with all between-copy arcs pointing forward.
Tournament make_layered(int d, int k);

// Every pair oriented by an independent fair coin; deterministic per seed.
Tournament random_tournament(int n, uint64_t seed);

bool verify_dk_witness(const Tournament& t, const DkWitness& w);

// Induced subtournament on the listed vertices (order gives new labels).
Tournament induced_tournament(const Tournament& t, const std::vector<int>& verts);

// true iff every arc points forward in `order` (order must be a permutation).
bool verify_transitive(const Tournament& t, const std::vector<int>& order);

} // namespace unav
