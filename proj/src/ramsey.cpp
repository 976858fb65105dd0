#include "unavoidable/ramsey.hpp"

#include <algorithm>
#include <stdexcept>

#include "unavoidable/errors.hpp"

namespace unav {

bool verify_clique(const ColoredCompleteGraph& g, const CliqueWitness& w) {
    for (size_t i = 0; i < w.vertices.size(); ++i)
        for (size_t j = i + 1; j < w.vertices.size(); ++j)
            if (g.color_of(w.vertices[i], w.vertices[j]) != w.color) return false;
    return true;
}

bool verify_transitive_witness(const Tournament& t, const TransitiveWitness& w) {
    for (size_t i = 0; i < w.vertices.size(); ++i)
        for (size_t j = i + 1; j < w.vertices.size(); ++j)
            if (!t.arc(w.vertices[i], w.vertices[j])) return false;
    return true;
}

namespace {

// One majority-color descent from a chosen first pivot. Later pivots are the
// lowest-index candidates. Each recorded vertex is adjacent in its recorded
// color to everything recorded after it.
std::optional<CliqueWitness> clique_descent(const ColoredCompleteGraph& g, int k, int start) {
    Bitset cand(g.n());
    cand.set_all();
    std::vector<int> reds, blues;
    int pivot = start;
    while (pivot >= 0) {
        cand.reset(pivot);
        Bitset redn = cand & g.row(pivot, Color::Red);
        Bitset bluen = cand & g.row(pivot, Color::Blue);
        if (redn.count() >= bluen.count()) { // tie -> red
            reds.push_back(pivot);
            cand = redn;
        } else {
            blues.push_back(pivot);
            cand = bluen;
        }
        if ((int)reds.size() == k) return CliqueWitness{reds, Color::Red};
        if ((int)blues.size() == k) return CliqueWitness{blues, Color::Blue};
        pivot = cand.first();
    }
    return std::nullopt;
}

} // namespace

std::optional<CliqueWitness> find_mono_clique(const ColoredCompleteGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_mono_clique: k must be >= 1");
    auto w = clique_descent(g, k, 0);
    if (w) { std::sort(w->vertices.begin(), w->vertices.end()); return w; }
    for (int start = 1; start < g.n(); ++start) {
        w = clique_descent(g, k, start);
        if (w) { std::sort(w->vertices.begin(), w->vertices.end()); return w; }
    }
    return std::nullopt;
}

namespace {

void bnb_clique(const std::vector<Bitset>& adj, Bitset cand,
                std::vector<int>& cur, std::vector<int>& best) {
    if (cur.size() > best.size()) best = cur;
    int v = cand.first();
    while (v >= 0) {
        if (cur.size() + cand.count() <= best.size()) return;
        cand.reset(v);
        cur.push_back(v);
        bnb_clique(adj, cand & adj[v], cur, best);
        cur.pop_back();
        v = cand.first();
    }
}

} // namespace

CliqueWitness max_mono_clique_exact(const ColoredCompleteGraph& g, Color c, int budget) {
    if (g.n() > budget)
        throw BudgetError("max_mono_clique_exact: n=" + std::to_string(g.n()) +
                          " exceeds budget " + std::to_string(budget));
    std::vector<Bitset> adj;
    adj.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.row(v, c));
    Bitset cand(g.n());
    cand.set_all();
    std::vector<int> cur, best;
    bnb_clique(adj, cand, cur, best);
    std::sort(best.begin(), best.end());
    return CliqueWitness{best, c};
}

namespace {

std::optional<TransitiveWitness> transitive_descent(const Tournament& t, int k, int start) {
    Bitset cand(t.n());
    cand.set_all();
    std::vector<int> front, back; // order = front + reverse(back)
    int pivot = start;
    while (pivot >= 0 && (int)(front.size() + back.size()) < k) {
        cand.reset(pivot);
        Bitset outn = cand & t.out_row(pivot);
        Bitset inn = cand & t.in_row(pivot);
        if (outn.count() >= inn.count()) { // tie -> out
            front.push_back(pivot);
            cand = outn;
        } else {
            back.push_back(pivot);
            cand = inn;
        }
        pivot = cand.first();
    }
    if ((int)(front.size() + back.size()) < k) return std::nullopt;
    std::vector<int> order = front;
    order.insert(order.end(), back.rbegin(), back.rend());
    return TransitiveWitness{order};
}

} // namespace

std::optional<TransitiveWitness> find_transitive_subtournament(const Tournament& t, int k) {
    if (k < 1) throw std::invalid_argument("find_transitive_subtournament: k must be >= 1");
    auto w = transitive_descent(t, k, 0);
    if (w) return w;
    for (int start = 1; start < t.n(); ++start) {
        w = transitive_descent(t, k, start);
        if (w) return w;
    }
    return std::nullopt;
}

TransitiveWitness max_transitive_exact(const Tournament& t, int budget) {
    int n = t.n();
    if (n > budget)
        throw BudgetError("max_transitive_exact: n=" + std::to_string(n) +
                          " exceeds budget " + std::to_string(budget));
    std::vector<uint32_t> out(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && t.arc(v, u)) out[v] |= uint32_t{1} << u;

    // trans[S] = 1 iff the induced subtournament on S is transitive:
    // some v in S beats all of S \ {v} and S \ {v} is transitive.
    uint32_t full = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    std::vector<char> trans(size_t(full) + 1, 0);
    trans[0] = 1;
    uint32_t best = 0;
    int best_size = 0;
    for (uint32_t S = 1; S <= full; ++S) {
        uint32_t rest = S;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t others = S & ~(uint32_t{1} << v);
            if ((out[v] & others) == others && trans[others]) {
                trans[S] = 1;
                break;
            }
        }
        if (trans[S]) {
            int sz = std::popcount(S);
            if (sz > best_size) { best_size = sz; best = S; }
        }
        if (S == full) break; // avoid overflow when n == 32
    }

    // peel sources off `best` to recover the transitive order
    std::vector<int> order;
    uint32_t S = best;
    while (S) {
        for (uint32_t rest = S; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t others = S & ~(uint32_t{1} << v);
            if ((out[v] & others) == others) {
                order.push_back(v);
                S = others;
                break;
            }
        }
    }
    return TransitiveWitness{order};
}

} // namespace unav
