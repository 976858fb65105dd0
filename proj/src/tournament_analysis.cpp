#include "unavoidable/tournament_analysis.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "unavoidable/errors.hpp"
#include "unavoidable/rng.hpp"

namespace unav {

long long count_directed_triangles(const Tournament& t) {
    long long n = t.n();
    long long total = n * (n - 1) * (n - 2) / 6;
    long long transitive = 0;
    for (int v = 0; v < n; ++v) {
        long long d = t.outdeg(v);
        transitive += d * (d - 1) / 2;
    }
    return total - transitive;
}

long long count_directed_triangles_enum(const Tournament& t) {
    long long c = 0;
    for (int a = 0; a < t.n(); ++a)
        for (int b = a + 1; b < t.n(); ++b)
            for (int d = b + 1; d < t.n(); ++d) {
                // cyclic iff not transitive; a triple is transitive iff some
                // vertex beats the other two and some vertex loses to both
                bool ab = t.arc(a, b), bd = t.arc(b, d), ad = t.arc(a, d);
                // cycle: a->b->d->a or a->d->b->a
                if ((ab && bd && !ad) || (!ab && !bd && ad)) ++c;
            }
    return c;
}

long long triangles_through_vertex(const Tournament& t, int v) {
    if (v < 0 || v >= t.n()) throw std::out_of_range("triangles_through_vertex: vertex out of range");
    // arcs from out-neighborhood of v into its in-neighborhood
    long long c = 0;
    const Bitset& inn = t.in_row(v);
    const Bitset& outn = t.out_row(v);
    for (int u = outn.first(); u >= 0; u = outn.next(u))
        c += t.out_row(u).intersect_count(inn);
    return c;
}

FarnessReport transitivity_distance_exact(const Tournament& t, int budget) {
    int n = t.n();
    if (n > budget)
        throw BudgetError("transitivity_distance_exact: n=" + std::to_string(n) +
                          " exceeds budget " + std::to_string(budget) +
                          "; use packing_lower_bound / upper_bound_distance");
    std::vector<uint32_t> out(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && t.arc(v, u)) out[v] |= uint32_t{1} << u;

    uint32_t full = (uint32_t{1} << n) - 1;
    const uint32_t INF = ~uint32_t{0};
    std::vector<uint32_t> dp(size_t(full) + 1, INF);
    dp[0] = 0;
    for (uint32_t S = 0; S < full; ++S) {
        if (dp[S] == INF) continue;
        uint32_t rest = full & ~S;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            // appending v after prefix S reverses the arcs v -> S
            uint32_t cost = dp[S] + (uint32_t)std::popcount(out[v] & S);
            uint32_t next = S | (uint32_t{1} << v);
            if (cost < dp[next]) dp[next] = cost;
        }
    }

    // reconstruct an optimal order back to front
    std::vector<int> order(n);
    uint32_t S = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (uint32_t rest = S; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t prev = S & ~(uint32_t{1} << v);
            if (dp[prev] != INF &&
                dp[prev] + (uint32_t)std::popcount(out[v] & prev) == dp[S]) {
                order[pos] = v;
                S = prev;
                break;
            }
        }
    }

    FarnessReport rep;
    rep.distance = dp[full];
    rep.epsilon_far = Ratio(rep.distance, (long long)n * n);
    rep.method = FarnessReport::Method::Exact;
    rep.order = std::move(order);
    return rep;
}

long long packing_lower_bound(const Tournament& t, uint64_t seed) {
    int n = t.n();
    if (n < 3) return 0;
    // collect cyclic triples (a < b < c canonical labels)
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool ab = t.arc(a, b), bc = t.arc(b, c), ac = t.arc(a, c);
                if ((ab && bc && !ac) || (!ab && !bc && ac))
                    triples.push_back({a, b, c});
            }
    if (seed != 0) {
        Rng rng(seed);
        for (size_t i = triples.size(); i > 1; --i)
            std::swap(triples[i - 1], triples[rng.below(i)]);
    }
    std::vector<char> used((size_t)n * n, 0);
    auto eid = [n](int u, int v) { return (size_t)std::min(u, v) * n + std::max(u, v); };
    long long packed = 0;
    for (auto& tr : triples) {
        size_t e1 = eid(tr[0], tr[1]), e2 = eid(tr[1], tr[2]), e3 = eid(tr[0], tr[2]);
        if (used[e1] || used[e2] || used[e3]) continue;
        used[e1] = used[e2] = used[e3] = 1;
        ++packed;
    }
    // greedy maximality: every triangle shares an edge with the packing and
    // each edge lies in at most n-2 triangles, so 3*p*(n-2) >= t
    if (n >= 4) {
        long long tri = count_directed_triangles(t);
        if (3 * packed * (n - 2) < tri)
            throw std::logic_error("packing_lower_bound: maximality bound violated");
    }
    return packed;
}

FarnessReport upper_bound_distance(const Tournament& t) {
    // repeatedly place the vertex of maximum outdegree within the remaining
    // subtournament (ties: lowest index); each step adds at most half the
    // remaining pairs as backward edges, so the total stays below C(n,2)/2.
    // A one-shot sort by global outdegree does not have this guarantee.
    int n = t.n();
    std::vector<int> order;
    order.reserve(n);
    Bitset remaining(n);
    remaining.set_all();
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = -1;
        for (int v = remaining.first(); v >= 0; v = remaining.next(v)) {
            int d = t.out_row(v).intersect_count(remaining);
            if (d > best_deg) { best = v; best_deg = d; }
        }
        order.push_back(best);
        remaining.reset(best);
    }
    long long backward = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.arc(order[j], order[i])) ++backward;
    long long half = (long long)n * (n - 1) / 4; // floor(C(n,2)/2)
    if (backward > half)
        throw std::logic_error("upper_bound_distance: majority bound violated");
    FarnessReport rep;
    rep.distance = backward;
    rep.epsilon_far = Ratio(backward, (long long)n * n);
    rep.method = FarnessReport::Method::UpperBound;
    rep.order = std::move(order);
    return rep;
}

} // namespace unav
