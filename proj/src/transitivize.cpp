#include "unavoidable/transitivize.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <stdexcept>

#include "unavoidable/tournament_analysis.hpp"

namespace unav {

namespace {

Bitset mask_of(int n, const std::vector<int>& W) {
    return Bitset::from_vector(n, W);
}

long long induced_triangles(const Tournament& t, const std::vector<int>& W, const Bitset& wmask) {
    long long w = (long long)W.size();
    long long total = w * (w - 1) * (w - 2) / 6;
    long long transitive = 0;
    for (int v : W) {
        long long d = t.out_row(v).intersect_count(wmask);
        transitive += d * (d - 1) / 2;
    }
    return total - transitive;
}

long long induced_triangles_through(const Tournament& t, int v, const Bitset& wmask) {
    Bitset outn = t.out_row(v) & wmask;
    Bitset inn = t.in_row(v) & wmask;
    long long c = 0;
    for (int u = outn.first(); u >= 0; u = outn.next(u))
        c += t.out_row(u).intersect_count(inn);
    return c;
}

} // namespace

std::vector<int> balanced_core(const Tournament& t, const std::vector<int>& W) {
    if (W.size() < 2) throw std::invalid_argument("balanced_core: block must have >= 2 vertices");
    Bitset wmask = mask_of(t.n(), W);
    long long w = (long long)W.size();
    std::vector<int> core;
    for (int v : W) {
        long long od = t.out_row(v).intersect_count(wmask);
        long long id = t.in_row(v).intersect_count(wmask);
        if (6 * od >= w && 6 * id >= w) core.push_back(v);
    }
    // every tournament has more than |W|/3 - 2 such vertices
    if (3 * (long long)core.size() <= w - 6)
        throw std::logic_error("balanced_core: size guarantee violated");
    return core;
}

int choose_pivot(const Tournament& t, const std::vector<int>& W, const std::vector<int>& C) {
    if (C.empty()) throw std::invalid_argument("choose_pivot: empty core");
    Bitset wmask = mask_of(t.n(), W);
    int best = -1;
    long long best_count = -1;
    for (int v : C) {
        long long c = induced_triangles_through(t, v, wmask);
        if (best < 0 || c < best_count) { best = v; best_count = c; }
    }
    long long tw = induced_triangles(t, W, wmask);
    if (best_count * (long long)C.size() > 3 * tw)
        throw std::logic_error("choose_pivot: averaging bound violated");
    return best;
}

namespace {

// Per-block finisher: an order of W (global labels) whose backward arcs get
// reversed. Exact subset DP when the block is small, outdegree sort above.
std::vector<int> finish_block(const Tournament& t, const std::vector<int>& W,
                              long long tw, const TransitivizeConfig& cfg) {
    Tournament sub = induced_tournament(t, W);
    std::vector<int> local;
    if (tw == 0) {
        // already transitive: outdegree-descending is the topological order
        local.resize(W.size());
        std::iota(local.begin(), local.end(), 0);
        std::stable_sort(local.begin(), local.end(),
                         [&](int a, int b) { return sub.outdeg(a) > sub.outdeg(b); });
    } else if ((int)W.size() <= cfg.exact_finisher) {
        local = transitivity_distance_exact(sub, cfg.exact_finisher).order;
    } else {
        local = upper_bound_distance(sub).order;
    }
    std::vector<int> order;
    order.reserve(W.size());
    for (int i : local) order.push_back(W[i]);
    return order;
}

} // namespace

TransitivizationResult transitivize(const Tournament& t, const TransitivizeConfig& cfg) {
    int n = t.n();
    long long t0 = count_directed_triangles(t);

    TransitivizationResult res;
    res.triangles = t0;
    res.certified_bound = 27.0 * std::sqrt((double)n * (double)t0);

    // split while |W| >= base_floor and |W| > 36*sqrt(t0/n):
    // |W|^2 * n > 1296 * t0, compared in integers
    auto splittable = [&](const std::vector<int>& W) {
        long long w = (long long)W.size();
        return w >= cfg.base_floor && w * w * n > 1296 * t0;
    };

    std::list<std::vector<int>> blocks;
    {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        blocks.push_back(std::move(all));
    }

    for (auto it = blocks.begin(); it != blocks.end();) {
        if (!splittable(*it)) { ++it; continue; }
        std::vector<int> W = std::move(*it);
        Bitset wmask = mask_of(n, W);
        long long tw = induced_triangles(t, W, wmask);

        std::vector<int> C = balanced_core(t, W);
        int v = choose_pivot(t, W, C);

        SplitStep step;
        step.block = W;
        step.pivot = v;
        step.block_triangles = tw;
        Bitset imask = t.in_row(v) & wmask;
        Bitset omask = t.out_row(v) & wmask;
        step.in_side = imask.to_vector();
        step.out_side = omask.to_vector();
        for (int o = omask.first(); o >= 0; o = omask.next(o)) {
            Bitset hits = t.out_row(o) & imask;
            for (int i = hits.first(); i >= 0; i = hits.next(i))
                step.reversed.emplace_back(o, i);
        }

        long long w = (long long)W.size();
        if ((long long)step.reversed.size() * w > 18 * tw)
            throw std::logic_error("transitivize: split reversal bound violated");
        if (w >= 12 && (6 * (long long)step.in_side.size() < w ||
                        6 * (long long)step.out_side.size() < w))
            throw std::logic_error("transitivize: split balance violated");

        for (auto& e : step.reversed) res.reversed_edges.push_back(e);

        // replace W by [I, v, O] in place
        it = blocks.erase(it);
        it = blocks.insert(it, step.out_side);
        it = blocks.insert(it, std::vector<int>{v});
        it = blocks.insert(it, step.in_side);
        res.steps.push_back(std::move(step));
        // revisit the I block (it may still be splittable)
    }

    for (auto& W : blocks) {
        if (W.size() == 1) { res.order.push_back(W[0]); continue; }
        Bitset wmask = mask_of(n, W);
        long long tw = induced_triangles(t, W, wmask);
        std::vector<int> order = finish_block(t, W, tw, cfg);
        for (size_t j = 0; j < order.size(); ++j)
            for (size_t i = 0; i < j; ++i)
                if (t.arc(order[j], order[i]))
                    res.reversed_edges.emplace_back(order[j], order[i]);
        res.order.insert(res.order.end(), order.begin(), order.end());
    }

    if (t0 == 0) {
        if (!res.reversed_edges.empty())
            throw std::logic_error("transitivize: reversals on a transitive input");
    } else {
        long long m = (long long)res.reversed_edges.size();
        if (m * m > 729 * n * t0)
            throw std::logic_error("transitivize: certified bound 27*sqrt(n*t) violated");
    }

    if (cfg.accounting && t0 >= 1) {
        // per-triangle weight telescoping: sum of 18/|W| over split blocks
        // containing the triangle stays below 18*sqrt(n/t)
        std::vector<Bitset> step_masks;
        step_masks.reserve(res.steps.size());
        for (auto& s : res.steps) step_masks.push_back(mask_of(n, s.block));
        double limit = 18.0 * std::sqrt((double)n / (double)t0) + 1e-9;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    bool ab = t.arc(a, b), bc = t.arc(b, c), ac = t.arc(a, c);
                    if (!((ab && bc && !ac) || (!ab && !bc && ac))) continue;
                    double w = 0.0;
                    for (size_t s = 0; s < step_masks.size(); ++s)
                        if (step_masks[s].test(a) && step_masks[s].test(b) && step_masks[s].test(c))
                            w += 18.0 / (double)res.steps[s].block.size();
                    if (w > limit)
                        throw std::logic_error("transitivize: weight telescoping violated");
                }
    }

    return res;
}

Tournament apply_reversals(const Tournament& t, const std::vector<std::pair<int, int>>& reversals) {
    Tournament out = t;
    for (auto [u, v] : reversals) {
        if (!out.arc(u, v))
            throw std::invalid_argument("apply_reversals: arc not present");
        out.orient(v, u);
    }
    return out;
}

} // namespace unav
