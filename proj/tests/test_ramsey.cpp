#include <algorithm>
#include <vector>

#include "doctest.h"
#include "unavoidable/errors.hpp"
#include "unavoidable/ramsey.hpp"

using namespace unav;

TEST_CASE("greedy mono clique succeeds at the 4^k guarantee") {
    // k = 2 at n = 16 = 4^2: guaranteed regardless of coloring
    for (int s = 0; s < 300; ++s) {
        auto g = random_coloring(16, 60 + (s % 30), 9000 + s);
        auto w = find_mono_clique(g, 2);
        REQUIRE(w.has_value());
        CHECK(verify_clique(g, *w));
        CHECK((int)w->vertices.size() == 2);
    }
}

TEST_CASE("greedy clique never exceeds the exact maximum") {
    for (int s = 0; s < 60; ++s) {
        int n = 6 + s % 9;
        auto g = random_coloring(n, (long long)n * (n - 1) / 4, 500 + s);
        auto red = max_mono_clique_exact(g, Color::Red);
        auto blue = max_mono_clique_exact(g, Color::Blue);
        CHECK(verify_clique(g, red));
        CHECK(verify_clique(g, blue));
        size_t best = std::max(red.vertices.size(), blue.vertices.size());
        for (int k = 1; k <= (int)best; ++k) {
            auto w = find_mono_clique(g, k);
            if (w) {
                CHECK(verify_clique(g, *w));
                CHECK(w->vertices.size() >= (size_t)k);
            }
        }
        // asking beyond the maximum must fail
        CHECK_FALSE(find_mono_clique(g, (int)best + 1).has_value());
    }
}

TEST_CASE("red perfect matching on K_4: both maxima are 2") {
    ColoredCompleteGraph g(4);
    g.set_color(0, 1, Color::Red);
    g.set_color(2, 3, Color::Red);
    CHECK(max_mono_clique_exact(g, Color::Red).vertices.size() == 2);
    CHECK(max_mono_clique_exact(g, Color::Blue).vertices.size() == 2);
    CHECK_FALSE(find_mono_clique(g, 3).has_value());
}

TEST_CASE("clique exact search respects its budget") {
    ColoredCompleteGraph g(34);
    CHECK_THROWS_AS((void)max_mono_clique_exact(g, Color::Red), BudgetError);
}

TEST_CASE("greedy transitive subtournament succeeds at the 2^(k-1) guarantee") {
    // k = 5 at n = 16 = 2^4: guaranteed regardless of orientation
    for (int s = 0; s < 300; ++s) {
        auto t = random_tournament(16, 7000 + s);
        auto w = find_transitive_subtournament(t, 5);
        REQUIRE(w.has_value());
        CHECK(verify_transitive_witness(t, *w));
        CHECK((int)w->vertices.size() == 5);
    }
}

TEST_CASE("greedy transitive never exceeds the exact maximum") {
    for (int s = 0; s < 60; ++s) {
        int n = 5 + s % 10;
        auto t = random_tournament(n, 300 + s);
        auto best = max_transitive_exact(t);
        CHECK(verify_transitive_witness(t, best));
        CHECK_FALSE(find_transitive_subtournament(t, (int)best.vertices.size() + 1).has_value());
        auto w = find_transitive_subtournament(t, (int)best.vertices.size());
        if (w) CHECK(verify_transitive_witness(t, *w));
    }
}

TEST_CASE("exact transitive maximum agrees with brute force on tiny n") {
    // brute force: check all subsets, transitivity via outdegree distinctness
    auto brute = [](const Tournament& t) {
        int n = t.n();
        int best = 0;
        for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) verts.push_back(v);
            auto sub = induced_tournament(t, verts);
            int m = sub.n();
            std::vector<int> degs(m);
            for (int v = 0; v < m; ++v) degs[v] = sub.outdeg(v);
            std::sort(degs.begin(), degs.end());
            bool trans = true;
            for (int v = 0; v < m; ++v) trans = trans && degs[v] == v;
            if (trans) best = std::max(best, m);
        }
        return best;
    };
    for (int s = 0; s < 40; ++s) {
        int n = 3 + s % 6;
        auto t = random_tournament(n, 1234 + s);
        CHECK((int)max_transitive_exact(t).vertices.size() == brute(t));
    }
}

TEST_CASE("the k-block construction has maximum transitive set 2k for k=2") {
    // D_2 on 6 vertices: best transitive subtournament known to be 4
    auto t = make_dk(2);
    CHECK(max_transitive_exact(t).vertices.size() == 4);
}

TEST_CASE("transitive exact search respects its budget") {
    auto t = random_tournament(21, 1);
    CHECK_THROWS_AS((void)max_transitive_exact(t), BudgetError);
}
