#include "unavoidable/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "unavoidable/rng.hpp"

namespace unav {

ColoredCompleteGraph::ColoredCompleteGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("coloring: n must be >= 1");
    red_.assign(n, Bitset(n));
    blue_.assign(n, Bitset(n));
    // all-blue by default
    for (int v = 0; v < n; ++v) {
        blue_[v].set_all();
        blue_[v].reset(v);
    }
}

void ColoredCompleteGraph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("coloring: vertex out of range");
    if (u == v) throw std::invalid_argument("coloring: self-pair");
}

void ColoredCompleteGraph::set_color(int u, int v, Color c) {
    check_pair(u, v);
    if (c == Color::Red) {
        red_[u].set(v); red_[v].set(u);
        blue_[u].reset(v); blue_[v].reset(u);
    } else {
        blue_[u].set(v); blue_[v].set(u);
        red_[u].reset(v); red_[v].reset(u);
    }
}

long long ColoredCompleteGraph::count_edges(Color c) const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v, c);
    return deg_sum / 2;
}

Density color_density(const ColoredCompleteGraph& g, Color c) {
    if (g.n() < 2) throw std::invalid_argument("color_density: undefined for n < 2");
    return Density{g.count_edges(c), g.pair_count()};
}

Bitset neighborhood(const ColoredCompleteGraph& g, int v, Color c) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("neighborhood: vertex out of range");
    return g.row(v, c);
}

Bitset common_neighborhood(const ColoredCompleteGraph& g, const std::vector<int>& U, Color c) {
    Bitset acc(g.n());
    acc.set_all();
    for (int v : U) {
        if (v < 0 || v >= g.n())
            throw std::out_of_range("common_neighborhood: vertex out of range");
        acc &= g.row(v, c);
    }
    return acc;
}

Bitset common_neighborhood(const ColoredCompleteGraph& g, const Bitset& U, Color c) {
    Bitset acc(g.n());
    acc.set_all();
    for (int v = U.first(); v >= 0; v = U.next(v)) acc &= g.row(v, c);
    return acc;
}

ColoredCompleteGraph random_coloring(int n, long long m, uint64_t seed) {
    ColoredCompleteGraph g(n);
    long long total = g.pair_count();
    if (m < 0 || m > total) throw std::invalid_argument("random_coloring: m out of range");

    // partial Fisher-Yates over pair indices: first m slots are the red pairs
    std::vector<long long> pairs(total);
    for (long long i = 0; i < total; ++i) pairs[i] = i;
    Rng rng(seed);
    for (long long i = 0; i < m; ++i) {
        long long j = i + (long long)rng.below(uint64_t(total - i));
        std::swap(pairs[i], pairs[j]);
    }
    // pair index p -> (u, v), u < v, row-major over u
    for (long long i = 0; i < m; ++i) {
        long long p = pairs[i];
        long long u = 0;
        long long row = n - 1;
        while (p >= row) { p -= row; ++u; --row; }
        long long v = u + 1 + p;
        g.set_color(int(u), int(v), Color::Red);
    }
    return g;
}

namespace {

bool sets_ok(const ColoredCompleteGraph& g, const FkWitness& w) {
    auto in_range = [&](const std::vector<int>& s) {
        for (int v : s)
            if (v < 0 || v >= g.n()) return false;
        return true;
    };
    if (!in_range(w.a_set) || !in_range(w.b_set))
        throw std::out_of_range("fk witness: vertex out of range");
    return true;
}

bool all_pairs(const ColoredCompleteGraph& g, const std::vector<int>& s, Color c) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.color_of(s[i], s[j]) != c) return false;
    return true;
}

bool all_cross(const ColoredCompleteGraph& g, const std::vector<int>& a,
               const std::vector<int>& b, Color c) {
    for (int u : a)
        for (int v : b)
            if (g.color_of(u, v) != c) return false;
    return true;
}

} // namespace

bool verify_fk_witness(const ColoredCompleteGraph& g, const FkWitness& w) {
    sets_ok(g, w);
    if (w.a_set.empty() || w.a_set.size() != w.b_set.size()) return false;
    std::vector<int> a = w.a_set, b = w.b_set;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty()) return false;

    Color c = w.color, o = other(c);
    if (!all_pairs(g, a, c)) return false;
    if (!all_cross(g, a, b, o)) return false;
    Color b_color = (w.variant == FkWitness::Variant::TwoCliques) ? c : o;
    return all_pairs(g, b, b_color);
}

ColoredCompleteGraph induced_coloring(const ColoredCompleteGraph& g, const std::vector<int>& verts) {
    ColoredCompleteGraph sub((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            sub.set_color((int)i, (int)j, g.color_of(verts[i], verts[j]));
    return sub;
}

} // namespace unav
