#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "unavoidable/errors.hpp"
#include "unavoidable/tournament_analysis.hpp"

using namespace unav;

TEST_CASE("triangle identity matches enumeration") {
    for (int s = 0; s < 200; ++s) {
        auto t = random_tournament(2 + s % 15, 100 + s);
        CHECK(count_directed_triangles(t) == count_directed_triangles_enum(t));
    }
    CHECK(count_directed_triangles(Tournament(10)) == 0); // transitive default
}

TEST_CASE("triangles through each vertex sum to 3t") {
    for (int s = 0; s < 50; ++s) {
        auto t = random_tournament(4 + s % 12, 200 + s);
        long long sum = 0;
        for (int v = 0; v < t.n(); ++v) sum += triangles_through_vertex(t, v);
        CHECK(sum == 3 * count_directed_triangles(t));
    }
    CHECK_THROWS_AS((void)triangles_through_vertex(Tournament(3), 3), std::out_of_range);
}

TEST_CASE("the k-block construction: k^3 triangles, distance k^2") {
    for (int k = 1; k <= 6; ++k)
        CHECK(count_directed_triangles(make_dk(k)) == (long long)k * k * k);
    for (int k = 1; k <= 4; ++k) {
        auto rep = transitivity_distance_exact(make_dk(k));
        CHECK(rep.distance == (long long)k * k);
        CHECK(rep.method == FarnessReport::Method::Exact);
        CHECK((int)rep.order.size() == 3 * k);
    }
    // k=2 spot checks: 8 triangles, 4 through each vertex
    auto d2 = make_dk(2);
    CHECK(count_directed_triangles(d2) == 8);
    for (int v = 0; v < 6; ++v) CHECK(triangles_through_vertex(d2, v) == 4);
}

TEST_CASE("exact distance agrees with all-orders brute force") {
    auto brute = [](const Tournament& t) {
        int n = t.n();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long long best = (long long)n * n;
        do {
            long long back = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (t.arc(perm[j], perm[i])) ++back;
            best = std::min(best, back);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };
    for (int s = 0; s < 30; ++s) {
        int n = 2 + s % 6; // up to 7! orders
        auto t = random_tournament(n, 4000 + s);
        auto rep = transitivity_distance_exact(t);
        CHECK(rep.distance == brute(t));
        // the reported order realizes the distance
        long long back = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t.arc(rep.order[j], rep.order[i])) ++back;
        CHECK(back == rep.distance);
    }
}

TEST_CASE("exact distance respects its budget") {
    CHECK_THROWS_AS((void)transitivity_distance_exact(random_tournament(21, 1)), BudgetError);
}

TEST_CASE("packing lower bound <= exact <= iterated-outdegree upper bound <= C(n,2)/2") {
    for (int s = 0; s < 400; ++s) {
        int n = 2 + s % 15;
        auto t = random_tournament(n, 6000 + s);
        long long lb = packing_lower_bound(t, s % 3 == 0 ? 0 : 777 + s);
        auto ex = transitivity_distance_exact(t);
        auto ub = upper_bound_distance(t);
        CHECK(lb <= ex.distance);
        CHECK(ex.distance <= ub.distance);
        CHECK(2 * ub.distance <= (long long)n * (n - 1) / 2);
        // upper-bound order actually has that many backward arcs
        long long back = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t.arc(ub.order[j], ub.order[i])) ++back;
        CHECK(back == ub.distance);
    }
}

TEST_CASE("labeled 3-cycles: one backward edge under the iterated order") {
    // both labelings of the cyclic triangle, including the one where a
    // one-shot global outdegree sort would give 2 backward edges
    for (bool flip : {false, true}) {
        Tournament t(3);
        if (flip) {
            t.orient(0, 2);
            t.orient(2, 1);
            t.orient(1, 0);
        } else {
            t.orient(0, 1);
            t.orient(1, 2);
            t.orient(2, 0);
        }
        CHECK(upper_bound_distance(t).distance == 1);
        CHECK(transitivity_distance_exact(t).distance == 1);
        CHECK(packing_lower_bound(t) == 1);
    }
}

TEST_CASE("transitive inputs: distance zero everywhere") {
    Tournament t(12);
    CHECK(transitivity_distance_exact(t).distance == 0);
    CHECK(packing_lower_bound(t) == 0);
    CHECK(upper_bound_distance(t).distance == 0);
}
