#include "unavoidable/fk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unavoidable/errors.hpp"
#include "unavoidable/ramsey.hpp"
#include "unavoidable/rng.hpp"

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
        if (r > (1ll << 62) / (n + 1)) return 1ll << 62; // saturate
    }
    return r;
}

// lexicographic k-combination iterator over [0, m)
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
    for (int i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

} // namespace

std::vector<int> bidegree_core(const ColoredCompleteGraph& g, const Ratio& eps) {
    int n = g.n();
    if (n < 4) throw std::invalid_argument("bidegree_core: n must be >= 4");
    if (eps.num <= 0 || !eps.leq(1, 2))
        throw std::invalid_argument("bidegree_core: eps must be in (0, 1/2]");
    std::vector<int> S;
    for (int v = 0; v < n; ++v) {
        long long rd = g.degree(v, Color::Red), bd = g.degree(v, Color::Blue);
        // deg >= eps*n/4 compared exactly
        if (4 * rd * eps.den >= eps.num * (long long)n &&
            4 * bd * eps.den >= eps.num * (long long)n)
            S.push_back(v);
    }
    // when both densities are >= eps, |S| >= eps*n/2 is a theorem
    if (color_density(g, Color::Red).at_least(eps) &&
        color_density(g, Color::Blue).at_least(eps)) {
        if (2 * (long long)S.size() * eps.den < eps.num * (long long)n)
            throw std::logic_error("bidegree_core: size guarantee violated");
    }
    return S;
}

namespace {

// Delete a vertex from every k-tuple of W with fewer than beta*n common
// neighbors in either color. Tuples scanned in lexicographic order; tuples
// touching an already-deleted vertex are skipped; the highest-index vertex
// of a bad tuple is removed. Every k-subset of the survivors was examined
// intact and found good.
std::vector<int> clean_bad_tuples(const ColoredCompleteGraph& g, std::vector<int> W,
                                  int k, double beta_n, bool* sampled) {
    if ((int)W.size() < k) return W;
    std::vector<char> deleted(W.size(), 0);
    long long combos = choose_ll((long long)W.size(), k);
    const long long kCleanBudget = 5'000'000;

    auto tuple_good = [&](const std::vector<int>& idx) {
        for (Color c : {Color::Red, Color::Blue}) {
            Bitset acc = g.row(W[idx[0]], c);
            for (int j = 1; j < k; ++j) acc &= g.row(W[idx[j]], c);
            if ((double)acc.count() < beta_n) return false;
        }
        return true;
    };

    if (combos <= kCleanBudget) {
        auto idx = first_combination(k);
        do {
            bool skip = false;
            for (int j : idx)
                if (deleted[j]) { skip = true; break; }
            if (!skip && !tuple_good(idx)) deleted[idx[k - 1]] = 1;
        } while (next_combination(idx, (int)W.size()));
    } else {
        // sampled cleaning above the enumeration budget
        if (sampled) *sampled = true;
        Rng rng(0x715e'c1ea'0000'0001ull ^ (uint64_t)W.size());
        for (long long s = 0; s < 1'000'000; ++s) {
            std::vector<int> idx;
            while ((int)idx.size() < k) {
                int j = (int)rng.below(W.size());
                if (deleted[j]) continue;
                if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
            }
            std::sort(idx.begin(), idx.end());
            if (!tuple_good(idx)) deleted[idx[k - 1]] = 1;
        }
    }

    std::vector<int> out;
    for (size_t i = 0; i < W.size(); ++i)
        if (!deleted[i]) out.push_back(W[i]);
    return out;
}

} // namespace

std::vector<int> dependent_random_choice(const ColoredCompleteGraph& g,
                                         const std::vector<int>& S,
                                         const DrcConfig& cfg, bool* sampled_out) {
    int n = g.n();
    if (cfg.trials <= 0) throw std::invalid_argument("dependent_random_choice: trials must be > 0");
    if (cfg.h < 1 || cfg.k < 1) throw std::invalid_argument("dependent_random_choice: h, k must be >= 1");
    if (S.empty()) return {};
    for (int v : S) {
        if ((double)g.degree(v, Color::Red) < cfg.alpha * n - 1e-9 ||
            (double)g.degree(v, Color::Blue) < cfg.alpha * n - 1e-9)
            throw std::invalid_argument("dependent_random_choice: S vertex below alpha*n degree");
    }
    double s_bound = std::pow((double)S.size(), -(double)cfg.k / (double)cfg.h);
    if (cfg.beta > s_bound + 1e-12)
        throw std::invalid_argument("dependent_random_choice: beta exceeds |S|^(-k/h)");

    Bitset smask = Bitset::from_vector(n, S);
    double beta_n = cfg.beta * n;
    bool sampled = false;
    std::vector<int> best;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(derive_seed(cfg.seed, (uint64_t)trial));
        Bitset w(n);
        w.set_all();
        for (int j = 0; j < cfg.h; ++j) w &= g.row((int)rng.below((uint64_t)n), Color::Red);
        for (int j = 0; j < cfg.h; ++j) w &= g.row((int)rng.below((uint64_t)n), Color::Blue);
        w &= smask;
        std::vector<int> cleaned = clean_bad_tuples(g, w.to_vector(), cfg.k, beta_n, &sampled);
        if (cleaned.size() > best.size() ||
            (cleaned.size() == best.size() && cleaned < best))
            best = std::move(cleaned);
    }
    if (sampled_out) *sampled_out = sampled;
    return best;
}

std::optional<FkWitness> fk_oracle(const ColoredCompleteGraph& g, int k, long long budget) {
    if (k < 1) throw std::invalid_argument("fk_oracle: k must be >= 1");
    int n = g.n();
    if (n < 2 * k) return std::nullopt;
    long long work = choose_ll(n, k) * choose_ll(n - k, k);
    if (work > budget)
        throw BudgetError("fk_oracle: enumeration of " + std::to_string(work) +
                          " set pairs exceeds budget " + std::to_string(budget));

    auto mono_color = [&](const std::vector<int>& s) -> std::optional<Color> {
        Color c = g.color_of(s[0], s[1]);
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.color_of(s[i], s[j]) != c) return std::nullopt;
        return c;
    };
    auto cross_color = [&](const std::vector<int>& a, const std::vector<int>& b)
        -> std::optional<Color> {
        Color c = g.color_of(a[0], b[0]);
        for (int u : a)
            for (int v : b)
                if (g.color_of(u, v) != c) return std::nullopt;
        return c;
    };

    auto a_idx = first_combination(k);
    do {
        std::vector<int> a = a_idx;
        std::optional<Color> ca = (k >= 2) ? mono_color(a) : std::optional<Color>{};
        if (k >= 2 && !ca) continue;
        std::vector<int> pool;
        for (int v = 0; v < n; ++v)
            if (std::find(a.begin(), a.end(), v) == a.end()) pool.push_back(v);
        auto b_idx = first_combination(k);
        do {
            std::vector<int> b(k);
            for (int i = 0; i < k; ++i) b[i] = pool[b_idx[i]];
            std::optional<Color> cb = (k >= 2) ? mono_color(b) : std::optional<Color>{};
            if (k >= 2 && !cb) continue;
            std::optional<Color> cx = cross_color(a, b);
            if (!cx) continue;
            // fixed check order per (a, b): red one-clique, red two-cliques,
            // blue one-clique, blue two-cliques
            for (Color c : {Color::Red, Color::Blue}) {
                bool a_ok = (k < 2) || *ca == c;
                if (!a_ok || *cx != other(c)) continue;
                bool b_is_other = (k < 2) || *cb == other(c);
                bool b_is_same = (k < 2) || *cb == c;
                if (b_is_other) {
                    FkWitness w{a, b, c, FkWitness::Variant::OneClique};
                    if (verify_fk_witness(g, w)) return w;
                }
                if (b_is_same) {
                    FkWitness w{a, b, c, FkWitness::Variant::TwoCliques};
                    if (verify_fk_witness(g, w)) return w;
                }
            }
        } while (next_combination(b_idx, (int)pool.size()));
    } while (next_combination(a_idx, n));
    return std::nullopt;
}

FkSearchReport find_fk(const ColoredCompleteGraph& g, int k, const Ratio& eps,
                       const FkConfig& cfg) {
    if (k < 1) throw std::invalid_argument("find_fk: k must be >= 1");
    int n = g.n();
    if (!color_density(g, Color::Red).at_least(eps) ||
        !color_density(g, Color::Blue).at_least(eps))
        throw std::invalid_argument("find_fk: hypothesis violated: a color density is below eps");

    FkSearchReport rep;
    auto log = [&](const std::string& stage, const std::string& outcome,
                   long long size, const std::string& param = "") {
        rep.stage_log.push_back({stage, outcome, size, param});
    };

    auto assemble = [&](const std::vector<int>& d, Color c, const std::vector<int>& x,
                        Color cx) {
        FkWitness w;
        w.a_set = d;
        w.b_set = x;
        w.color = c;
        w.variant = (cx == c) ? FkWitness::Variant::TwoCliques : FkWitness::Variant::OneClique;
        std::sort(w.a_set.begin(), w.a_set.end());
        std::sort(w.b_set.begin(), w.b_set.end());
        if (!verify_fk_witness(g, w))
            throw std::logic_error("find_fk: assembled witness failed verification");
        rep.witness = std::move(w);
    };

    bool stage_failed = false;
    std::vector<int> S;
    if (n >= 4) S = bidegree_core(g, eps);
    log("bidegree_core", S.empty() ? "empty" : "ok", (long long)S.size(),
        "eps=" + eps.str());

    if (!S.empty()) {
        DrcConfig dcfg;
        dcfg.alpha = eps.to_double() / 4.0;
        dcfg.h = 2 * k;
        dcfg.beta = std::min(std::pow(4.0, k) / n, 1.0 / std::sqrt((double)S.size()));
        dcfg.k = k;
        dcfg.trials = cfg.trials;
        dcfg.seed = cfg.seed;
        std::vector<int> T = dependent_random_choice(g, S, dcfg, &rep.sampled_certification);
        log("dependent_random_choice", (int)T.size() >= k ? "ok" : "too-small",
            (long long)T.size(), "beta=" + std::to_string(dcfg.beta));

        if ((int)T.size() >= k) {
            ColoredCompleteGraph gt = induced_coloring(g, T);
            auto d_local = find_mono_clique(gt, k);
            if (d_local) {
                std::vector<int> D;
                for (int v : d_local->vertices) D.push_back(T[v]);
                std::sort(D.begin(), D.end());
                Color c = d_local->color;
                log("clique_in_T", "ok", k, color_name(c));

                std::vector<int> N = common_neighborhood(g, D, other(c)).to_vector();
                log("opposite_neighborhood", (int)N.size() >= k ? "ok" : "too-small",
                    (long long)N.size());
                if ((int)N.size() >= k) {
                    ColoredCompleteGraph gn = induced_coloring(g, N);
                    auto x_local = find_mono_clique(gn, k);
                    if (x_local) {
                        std::vector<int> X;
                        for (int v : x_local->vertices) X.push_back(N[v]);
                        log("clique_in_N", "ok", k, color_name(x_local->color));
                        assemble(D, c, X, x_local->color);
                    } else {
                        log("clique_in_N", "not-found", 0);
                        stage_failed = true;
                    }
                } else {
                    stage_failed = true;
                }
            } else {
                log("clique_in_T", "not-found", 0);
                stage_failed = true;
            }
        } else {
            stage_failed = true;
        }
    } else {
        stage_failed = true;
    }

    if (!rep.witness && stage_failed && cfg.fallback) {
        long long work = choose_ll(n, k) * choose_ll(n - k, k);
        if (work <= cfg.fallback_budget) {
            rep.fallback_used = true;
            rep.witness = fk_oracle(g, k, cfg.fallback_budget);
            rep.exhausted = !rep.witness.has_value();
            log("fk_oracle", rep.witness ? "ok" : "exhausted", rep.witness ? k : 0);
        } else {
            log("fk_oracle", "over-budget", work);
        }
    }
    return rep;
}

LowerBoundReport lower_bound_experiment(int k, const Ratio& eps, int n, int trials,
                                        uint64_t seed, long long oracle_budget) {
    if (k < 2) throw std::invalid_argument("lower_bound_experiment: k must be >= 2");
    if (!eps.leq(1, 2) || eps.num <= 0)
        throw std::invalid_argument("lower_bound_experiment: eps must be in (0, 1/2]");
    if (n < 2 || trials < 1)
        throw std::invalid_argument("lower_bound_experiment: need n >= 2 and trials >= 1");

    long long pairs = (long long)n * (n - 1) / 2;
    long long m = (long long)((__int128)eps.num * pairs / eps.den); // floor(eps*C(n,2))

    bool can_oracle = n >= 2 * k && choose_ll(n, k) * choose_ll(n - k, k) <= oracle_budget;

    LowerBoundReport rep;
    rep.fk_checked = can_oracle;
    for (int trial = 0; trial < trials; ++trial) {
        uint64_t s = derive_seed(seed, (uint64_t)trial);
        ColoredCompleteGraph g = random_coloring(n, m, s);

        LowerBoundRow row;
        row.trial = trial;
        row.seed = s;

        if (n >= k) {
            auto idx = first_combination(k);
            do {
                bool all_red = true;
                for (int i = 0; i < k && all_red; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (!g.is_red(idx[i], idx[j])) { all_red = false; break; }
                if (all_red) { row.red_kk = true; break; }
            } while (next_combination(idx, n));
        }

        if (n >= 2 * k) {
            // red complete bipartite with disjoint parts of size k
            auto a_idx = first_combination(k);
            do {
                Bitset red_common(g.n());
                red_common.set_all();
                for (int v : a_idx) red_common &= g.row(v, Color::Red);
                for (int v : a_idx) red_common.reset(v);
                if (red_common.count() >= k) { row.red_bipartite = true; break; }
            } while (next_combination(a_idx, n));
        }

        if (can_oracle)
            row.fk_free = fk_oracle(g, k, oracle_budget) ? 0 : 1;

        rep.red_kk_count += row.red_kk;
        rep.red_bipartite_count += row.red_bipartite;
        if (row.fk_free == 1) ++rep.fk_free_count;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace unav
