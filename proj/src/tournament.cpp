#include "unavoidable/tournament.hpp"

#include <algorithm>
#include <stdexcept>

#include "unavoidable/rng.hpp"

namespace unav {

Tournament::Tournament(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("tournament: n must be >= 1");
    out_.assign(n, Bitset(n));
    in_.assign(n, Bitset(n));
    // default orientation: u -> v for u < v (transitive)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            out_[u].set(v);
            in_[v].set(u);
        }
}

void Tournament::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("tournament: vertex out of range");
    if (u == v) throw std::invalid_argument("tournament: self-arc");
}

void Tournament::orient(int u, int v) {
    check_pair(u, v);
    out_[u].set(v); in_[v].set(u);
    out_[v].reset(u); in_[u].reset(v);
}

Tournament make_dk(int k) {
    if (k < 1) throw std::invalid_argument("make_dk: k must be >= 1");
    Tournament t(3 * k);
    // block-major labels: block i is [i*k, (i+1)*k); within-block transitive,
    // between blocks i -> i+1 (mod 3)
    for (int u = 0; u < 3 * k; ++u)
        for (int v = 0; v < 3 * k; ++v) {
            if (u == v) continue;
            int bu = u / k, bv = v / k;
            if (bu == bv) {
                if (u < v) t.orient(u, v);
            } else if ((bu + 1) % 3 == bv) {
                t.orient(u, v);
            }
        }
    return t;
}

Tournament make_layered(int d, int k) {
    if (d < 1 || k < 1) throw std::invalid_argument("make_layered: d, k must be >= 1");
    int block = 3 * k;
    Tournament t(d * block);
    Tournament dk = make_dk(k);
    for (int u = 0; u < t.n(); ++u)
        for (int v = 0; v < t.n(); ++v) {
            if (u == v) continue;
            int cu = u / block, cv = v / block;
            if (cu < cv) t.orient(u, v);
            else if (cu == cv && dk.arc(u % block, v % block)) t.orient(u, v);
        }
    return t;
}

Tournament random_tournament(int n, uint64_t seed) {
    Tournament t(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin()) t.orient(u, v);
            else t.orient(v, u);
        }
    return t;
}

namespace {

bool transitive_in_listed_order(const Tournament& t, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!t.arc(s[i], s[j])) return false;
    return true;
}

bool all_forward(const Tournament& t, const std::vector<int>& from, const std::vector<int>& to) {
    for (int u : from)
        for (int v : to)
            if (!t.arc(u, v)) return false;
    return true;
}

} // namespace

bool verify_dk_witness(const Tournament& t, const DkWitness& w) {
    const std::vector<int>* sets[3] = {&w.u0, &w.u1, &w.u2};
    std::vector<int> all;
    for (auto* s : sets) {
        for (int v : *s) {
            if (v < 0 || v >= t.n()) throw std::out_of_range("dk witness: vertex out of range");
            all.push_back(v);
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("dk witness: sets overlap");
    size_t k = w.u0.size();
    if (k == 0 || w.u1.size() != k || w.u2.size() != k) return false;
    for (auto* s : sets)
        if (!transitive_in_listed_order(t, *s)) return false;
    return all_forward(t, w.u0, w.u1) && all_forward(t, w.u1, w.u2) &&
           all_forward(t, w.u2, w.u0);
}

Tournament induced_tournament(const Tournament& t, const std::vector<int>& verts) {
    Tournament sub((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j) {
            if (i == j) continue;
            if (t.arc(verts[i], verts[j])) sub.orient((int)i, (int)j);
        }
    return sub;
}

bool verify_transitive(const Tournament& t, const std::vector<int>& order) {
    if ((int)order.size() != t.n()) throw std::invalid_argument("verify_transitive: not a permutation");
    std::vector<char> seen(t.n(), 0);
    for (int v : order) {
        if (v < 0 || v >= t.n() || seen[v])
            throw std::invalid_argument("verify_transitive: not a permutation");
        seen[v] = 1;
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (!t.arc(order[i], order[j])) return false;
    return true;
}

} // namespace unav
