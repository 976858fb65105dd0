#include "unavoidable/dk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unavoidable/errors.hpp"
#include "unavoidable/ramsey.hpp"
#include "unavoidable/rng.hpp"
#include "unavoidable/tournament_analysis.hpp"

namespace unav {

namespace {

uint64_t derive_seed(uint64_t seed, uint64_t i) {
    uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (i + 1));
    return Rng::splitmix64(x);
}

long long choose_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1ll << 62) / (n + 1)) return 1ll << 62;
    }
    return r;
}

bool next_combination(std::vector<int>& idx, int m) {
    int k = (int)idx.size();
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < m - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

// topological order of the induced subtournament, or nullopt if not transitive
std::optional<std::vector<int>> transitive_order(const Tournament& t, const std::vector<int>& s) {
    std::vector<int> order = s;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (int v : s) {
            if (v != a && t.arc(a, v)) ++da;
            if (v != b && t.arc(b, v)) ++db;
        }
        if (da != db) return da > db;
        return a < b;
    });
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (!t.arc(order[i], order[j])) return std::nullopt;
    return order;
}

} // namespace

long long positively_oriented_count(const Tournament& t, const std::vector<int>& v0,
                                    const std::vector<int>& v1, const std::vector<int>& v2) {
    Bitset m0 = Bitset::from_vector(t.n(), v0);
    long long count = 0;
    for (int b : v1)
        for (int c : v2) {
            if (!t.arc(b, c)) continue;
            // a in v0 with a->b and c->a closes the cycle a->b->c->a
            Bitset a = t.in_row(b);
            a &= t.out_row(c);
            a &= m0;
            count += a.count();
        }
    return count;
}

Tripartition best_tripartition(const Tournament& t, int trials, uint64_t seed) {
    int n = t.n();
    if (n < 3) throw std::invalid_argument("best_tripartition: n must be >= 3");
    if (trials < 1) throw std::invalid_argument("best_tripartition: trials must be >= 1");
    long long tri = count_directed_triangles(t);

    Tripartition best;
    best.positively_oriented_count = -1;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, (uint64_t)trial));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below((uint64_t)i + 1)]);
        Tripartition p;
        for (int i = 0; i < n; ++i) {
            if (i % 3 == 0) p.v0.push_back(perm[i]);
            else if (i % 3 == 1) p.v1.push_back(perm[i]);
            else p.v2.push_back(perm[i]);
        }
        std::sort(p.v0.begin(), p.v0.end());
        std::sort(p.v1.begin(), p.v1.end());
        std::sort(p.v2.begin(), p.v2.end());
        p.positively_oriented_count = positively_oriented_count(t, p.v0, p.v1, p.v2);
        if (p.positively_oriented_count > best.positively_oriented_count) best = std::move(p);
    }
    best.cleared_t_over_9 = 9 * best.positively_oriented_count >= tri;
    return best;
}

BipartiteGraph build_h(const Tournament& t, const Tripartition& p, const Ratio& delta) {
    long long tri = count_directed_triangles(t);
    if (delta.num <= 0 && tri > 0)
        throw std::invalid_argument("build_h: delta must be positive when triangles exist");
    int n = t.n();
    Bitset m0 = Bitset::from_vector(n, p.v0);

    BipartiteGraph h;
    h.left = p.v1;
    h.right = p.v2;
    h.adj.assign(h.left.size(), Bitset((int)h.right.size()));
    for (size_t i = 0; i < h.left.size(); ++i) {
        int b = h.left[i];
        for (size_t j = 0; j < h.right.size(); ++j) {
            int c = h.right[j];
            if (!t.arc(b, c)) continue;
            Bitset a = t.in_row(b);
            a &= t.out_row(c);
            a &= m0;
            // at least delta*n/2 completing vertices, compared exactly
            if (2 * (long long)a.count() * delta.den >= delta.num * (long long)n)
                h.adj[i].set((int)j);
        }
    }
    for (size_t i = 0; i < h.left.size(); ++i)
        for (int j = h.adj[i].first(); j >= 0; j = h.adj[i].next(j))
            if (!t.arc(h.left[i], h.right[j]))
                throw std::logic_error("build_h: edge without underlying arc");
    return h;
}

namespace {

std::vector<Bitset> right_adjacency(const BipartiteGraph& h) {
    std::vector<Bitset> radj(h.right.size(), Bitset((int)h.left.size()));
    for (size_t i = 0; i < h.left.size(); ++i)
        for (int j = h.adj[i].first(); j >= 0; j = h.adj[i].next(j))
            radj[j].set((int)i);
    return radj;
}

// one-sided analogue of the colored tuple cleaning
std::vector<int> clean_bad_dtuples(const BipartiteGraph& h, std::vector<int> W,
                                   int d, double beta_r, bool* sampled) {
    if ((int)W.size() < d) return W;
    std::vector<char> deleted(W.size(), 0);
    long long combos = choose_ll((long long)W.size(), d);
    const long long kCleanBudget = 5'000'000;

    auto tuple_good = [&](const std::vector<int>& idx) {
        Bitset acc = h.adj[W[idx[0]]];
        for (int j = 1; j < d; ++j) acc &= h.adj[W[idx[j]]];
        return (double)acc.count() >= beta_r;
    };

    if (combos <= kCleanBudget) {
        auto idx = first_combination(d);
        do {
            bool skip = false;
            for (int j : idx)
                if (deleted[j]) { skip = true; break; }
            if (!skip && !tuple_good(idx)) deleted[idx[d - 1]] = 1;
        } while (next_combination(idx, (int)W.size()));
    } else {
        if (sampled) *sampled = true;
        Rng rng(0xb1a5'00d1'0000'0001ull ^ (uint64_t)W.size());
        for (long long s = 0; s < 1'000'000; ++s) {
            std::vector<int> idx;
            while ((int)idx.size() < d) {
                int j = (int)rng.below(W.size());
                if (deleted[j]) continue;
                if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
            }
            std::sort(idx.begin(), idx.end());
            if (!tuple_good(idx)) deleted[idx[d - 1]] = 1;
        }
    }

    std::vector<int> out;
    for (size_t i = 0; i < W.size(); ++i)
        if (!deleted[i]) out.push_back(W[i]);
    return out;
}

} // namespace

std::vector<int> bipartite_drc(const BipartiteGraph& h, const BipartiteDrcConfig& cfg,
                               bool* sampled_out) {
    if (h.left.empty() || h.right.empty())
        throw std::invalid_argument("bipartite_drc: both parts must be nonempty");
    if (cfg.trials < 1 || cfg.d < 1 || cfg.hh < 1)
        throw std::invalid_argument("bipartite_drc: trials, d, hh must be >= 1");
    double l_bound = std::pow((double)h.left.size(), -(double)cfg.d / (double)cfg.hh);
    if (cfg.beta > l_bound + 1e-12)
        throw std::invalid_argument("bipartite_drc: beta exceeds |left|^(-d/hh)");

    auto radj = right_adjacency(h);
    int r = (int)h.right.size();
    double beta_r = cfg.beta * r;
    bool sampled = false;
    std::vector<int> best;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(derive_seed(cfg.seed, (uint64_t)trial));
        Bitset u1((int)h.left.size());
        u1.set_all();
        for (int j = 0; j < cfg.hh; ++j) u1 &= radj[rng.below((uint64_t)r)];
        std::vector<int> cleaned = clean_bad_dtuples(h, u1.to_vector(), cfg.d, beta_r, &sampled);
        if (cleaned.size() > best.size() ||
            (cleaned.size() == best.size() && cleaned < best))
            best = std::move(cleaned);
    }
    if (sampled_out) *sampled_out = sampled;
    return best;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
zarankiewicz_extract(const BipartiteGraph& f, int s, int tt, long long budget) {
    if (s < 1 || tt < 1) throw std::invalid_argument("zarankiewicz_extract: s, tt must be >= 1");
    int r = (int)f.right.size();
    if (tt > r) return std::nullopt;
    if (choose_ll(r, tt) > budget)
        throw BudgetError("zarankiewicz_extract: right-side enumeration exceeds budget");
    auto radj = right_adjacency(f);
    auto idx = first_combination(tt);
    do {
        Bitset common = radj[idx[0]];
        for (int j = 1; j < tt; ++j) common &= radj[idx[j]];
        if (common.count() >= s) {
            std::vector<int> lefts;
            for (int i = common.first(); i >= 0 && (int)lefts.size() < s; i = common.next(i))
                lefts.push_back(i);
            return std::make_pair(lefts, idx);
        }
    } while (next_combination(idx, r));
    return std::nullopt;
}

double zar_bound(long long m, long long n, int s, int t) {
    return std::pow((double)(s - 1), 1.0 / t) * (double)(n - t + 1) *
               std::pow((double)m, 1.0 - 1.0 / t) +
           (double)(t - 1) * (double)m;
}

std::optional<DkWitness> dk_oracle(const Tournament& t, int k, long long budget) {
    if (k < 1) throw std::invalid_argument("dk_oracle: k must be >= 1");
    int n = t.n();
    if (n < 3 * k) return std::nullopt;
    long long work = choose_ll(n, k) * choose_ll(n - k, k) * choose_ll(n - 2 * k, k);
    if (work > budget)
        throw BudgetError("dk_oracle: enumeration of " + std::to_string(work) +
                          " set triples exceeds budget " + std::to_string(budget));

    auto a_idx = first_combination(k);
    do {
        auto a_ord = transitive_order(t, a_idx);
        if (!a_ord) continue;
        std::vector<int> pool_b;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(a_idx.begin(), a_idx.end(), v)) pool_b.push_back(v);
        auto b_idx = first_combination(k);
        do {
            std::vector<int> b(k);
            for (int i = 0; i < k; ++i) b[i] = pool_b[b_idx[i]];
            auto b_ord = transitive_order(t, b);
            if (!b_ord) continue;
            bool ab = true;
            for (int u : a_idx)
                for (int v : b)
                    if (!t.arc(u, v)) { ab = false; break; }
            if (!ab) continue;
            std::vector<int> pool_c;
            for (int v : pool_b)
                if (!std::binary_search(b.begin(), b.end(), v)) pool_c.push_back(v);
            auto c_idx = first_combination(k);
            do {
                std::vector<int> c(k);
                for (int i = 0; i < k; ++i) c[i] = pool_c[c_idx[i]];
                auto c_ord = transitive_order(t, c);
                if (!c_ord) continue;
                DkWitness w{*a_ord, *b_ord, *c_ord};
                if (verify_dk_witness(t, w)) return w;
            } while (next_combination(c_idx, (int)pool_c.size()));
        } while (next_combination(b_idx, (int)pool_b.size()));
    } while (next_combination(a_idx, n));
    return std::nullopt;
}

namespace {

// transitive subtournament of a given size inside `verts`: greedy first,
// exact subset DP when the set is small enough
std::optional<std::vector<int>> find_transitive_in(const Tournament& t,
                                                   const std::vector<int>& verts, int size) {
    if ((int)verts.size() < size) return std::nullopt;
    Tournament sub = induced_tournament(t, verts);
    auto w = find_transitive_subtournament(sub, size);
    std::vector<int> local;
    if (w) {
        local = w->vertices;
    } else if (sub.n() <= 20) {
        auto exact = max_transitive_exact(sub);
        if ((int)exact.vertices.size() < size) return std::nullopt;
        local.assign(exact.vertices.begin(), exact.vertices.begin() + size);
    } else {
        return std::nullopt;
    }
    std::vector<int> out;
    for (int i : local) out.push_back(verts[i]);
    return out;
}

} // namespace

DkSearchReport find_dk(const Tournament& t, int k, const DkConfig& cfg) {
    if (k < 1) throw std::invalid_argument("find_dk: k must be >= 1");
    int n = t.n();
    long long tri = count_directed_triangles(t);

    DkSearchReport rep;
    auto log = [&](const std::string& stage, const std::string& outcome,
                   long long size, const std::string& param = "") {
        rep.stage_log.push_back({stage, outcome, size, param});
    };

    if (tri == 0) {
        // D_k contains cyclic triangles for every k
        rep.reason = "no directed triangles";
        rep.exhausted = true;
        log("triangle_count", "zero", 0);
        return rep;
    }
    if (n < 3 * k) {
        rep.reason = "hypothesis-too-small";
        log("size_check", "n < 3k", n);
        return rep;
    }

    Ratio delta(tri, (long long)n * n * n);
    double delta_d = delta.to_double();
    int d = std::max(k, std::min(cfg.d_cap, (int)std::ceil((double)k / delta_d)));
    int s = cfg.x0_size > 0 ? cfg.x0_size : k;

    for (int attempt = 0; attempt < std::max(1, cfg.retries); ++attempt) {
        uint64_t aseed = derive_seed(cfg.seed, 0x5eed0000ull + (uint64_t)attempt);
        Tripartition p = best_tripartition(t, cfg.tripartition_trials, aseed);
        log("tripartition", p.cleared_t_over_9 ? "ok" : "below-t/9",
            p.positively_oriented_count);

        BipartiteGraph h = build_h(t, p, delta);
        long long he = h.edge_count();
        log("build_h", he > 0 ? "ok" : "empty", he);
        if (he == 0) continue;

        BipartiteDrcConfig dcfg;
        dcfg.d = d;
        dcfg.hh = 2 * d;
        dcfg.beta = 1.0 / std::sqrt((double)h.left.size());
        dcfg.trials = cfg.drc_trials;
        dcfg.seed = derive_seed(aseed, 1);
        std::vector<int> w1_idx = bipartite_drc(h, dcfg);
        log("bipartite_drc", (int)w1_idx.size() >= d ? "ok" : "too-small",
            (long long)w1_idx.size(), "d=" + std::to_string(d));
        if ((int)w1_idx.size() < d) continue;

        std::vector<int> w1;
        for (int i : w1_idx) w1.push_back(h.left[i]);
        auto x1 = find_transitive_in(t, w1, d);
        log("transitive_x1", x1 ? "ok" : "not-found", x1 ? d : 0);
        if (!x1) continue;

        // common H-neighborhood of X1, as global v2 vertices
        Bitset common((int)h.right.size());
        common.set_all();
        for (int v : *x1) {
            size_t li = std::find(h.left.begin(), h.left.end(), v) - h.left.begin();
            common &= h.adj[li];
        }
        std::vector<int> nh;
        for (int j = common.first(); j >= 0; j = common.next(j)) nh.push_back(h.right[j]);
        auto x2 = find_transitive_in(t, nh, d);
        log("transitive_x2", x2 ? "ok" : "not-found", x2 ? d : 0,
            "|N_H(X1)|=" + std::to_string(nh.size()));
        if (!x2) continue;

        // F on v0 x {0..d-1}: (a, i) iff (a, x_i, y_i) is positively oriented
        BipartiteGraph f;
        f.left = p.v0;
        f.right.resize(d);
        std::iota(f.right.begin(), f.right.end(), 0);
        f.adj.assign(f.left.size(), Bitset(d));
        for (size_t ai = 0; ai < f.left.size(); ++ai) {
            int a = f.left[ai];
            for (int i = 0; i < d; ++i) {
                int xi = (*x1)[i], yi = (*x2)[i];
                if (t.arc(a, xi) && t.arc(xi, yi) && t.arc(yi, a)) f.adj[ai].set(i);
            }
        }
        auto extracted = zarankiewicz_extract(f, s, k);
        log("zarankiewicz", extracted ? "ok" : "not-found",
            extracted ? (long long)extracted->first.size() : 0,
            "|F|=" + std::to_string(f.edge_count()));
        if (!extracted) continue;

        auto& [x0_idx, r_idx] = *extracted;
        // widen X0 to the full common neighborhood of R before seeking U0
        Bitset x0_common((int)f.left.size());
        x0_common.set_all();
        auto fradj = [&](int j) {
            Bitset col((int)f.left.size());
            for (size_t ai = 0; ai < f.left.size(); ++ai)
                if (f.adj[ai].test(j)) col.set((int)ai);
            return col;
        };
        for (int j : r_idx) x0_common &= fradj(j);
        std::vector<int> x0;
        for (int i = x0_common.first(); i >= 0; i = x0_common.next(i))
            x0.push_back(f.left[i]);

        auto u0 = find_transitive_in(t, x0, k);
        log("transitive_u0", u0 ? "ok" : "not-found", u0 ? k : 0,
            "|X0|=" + std::to_string(x0.size()));
        if (!u0) continue;

        DkWitness w;
        w.u0 = *u0;
        for (int i : r_idx) w.u1.push_back((*x1)[i]);
        for (int i : r_idx) w.u2.push_back((*x2)[i]);
        if (!verify_dk_witness(t, w))
            throw std::logic_error("find_dk: assembled witness failed verification");
        rep.witness = std::move(w);
        rep.reason = "found";
        return rep;
    }

    rep.reason = "stage-failed";
    if (cfg.fallback) {
        long long work = choose_ll(n, k) * choose_ll(n - k, k) * choose_ll(n - 2 * k, k);
        if (work <= cfg.fallback_budget) {
            rep.fallback_used = true;
            rep.witness = dk_oracle(t, k, cfg.fallback_budget);
            rep.exhausted = !rep.witness.has_value();
            rep.reason = rep.witness ? "found-by-oracle" : "not-found";
            log("dk_oracle", rep.witness ? "ok" : "exhausted", rep.witness ? k : 0);
        } else {
            rep.reason = "hypothesis-too-small";
            log("dk_oracle", "over-budget", work);
        }
    }
    return rep;
}

} // namespace unav
