#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "ugvplan/local_search.hpp"

using namespace ugvplan;

TEST_CASE("neighbor sampling keeps the start bit and always moves") {
    Rng rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(7));
        const uint32_t mask = 1u | (rng.below(1u << (m - 1)) << 1);
        const Selection sel = Selection::from_mask(m, mask);
        const Selection out = sample_neighbor(sel, 3, rng);
        CHECK(out.bits[0] == 1);
        CHECK(!(out == sel));
        CHECK(out.size() == m);
    }
}

TEST_CASE("neighbor sampling guards its arguments") {
    Rng rng(2);
    CHECK_THROWS_AS(sample_neighbor(Selection::start_only(1), 3, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_neighbor(Selection::start_only(4), 0, rng), std::invalid_argument);
}

TEST_CASE("a two-vertex selection has exactly one neighbor") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Selection out = sample_neighbor(Selection::start_only(2), 1, rng);
        CHECK(out == Selection::all(2));
    }
}

TEST_CASE("radius three on five vertices reaches all fourteen neighbors") {
    Rng rng(4);
    const Selection start = Selection::start_only(5);
    std::set<uint32_t> seen;
    long flip_counts[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 100000; ++trial) {
        const Selection out = sample_neighbor(start, 3, rng);
        int dist = 0;
        for (int i = 0; i < 5; ++i) dist += out.bits[i] != start.bits[i];
        REQUIRE(dist >= 1);
        REQUIRE(dist <= 3);
        ++flip_counts[dist];
        seen.insert(out.mask());
    }
    // 4 + 6 + 4 selections at flip distance 1, 2, 3.
    CHECK(seen.size() == 14);
    // The flip count is drawn uniformly, a third each way.
    for (int d = 1; d <= 3; ++d) {
        CHECK(flip_counts[d] > 33333 - 1500);
        CHECK(flip_counts[d] < 33333 + 1500);
    }
}

TEST_CASE("search runs the exact number of evaluations") {
    const Scenario sc = testutil::random_scenario(91, 5, 6);
    for (int iters : {1, 7, 20}) {
        const SearchResult res = local_search(sc, iters, 3, 17);
        CHECK(res.evals == iters);
    }
    CHECK_THROWS_AS(local_search(sc, 0, 3, 17), std::invalid_argument);
}

TEST_CASE("search never loses to the no-movement plan") {
    for (uint64_t seed : {92, 93, 94}) {
        const Scenario sc = testutil::random_scenario(seed, 5, 7);
        PlanEvaluator eval(sc);
        const double start_value = eval.objective(Selection::start_only(7));
        Rng rng(seed * 3);
        const SearchResult res = local_search(eval, 25, 3, rng);
        CHECK(res.value <= start_value);
        CHECK(res.value == eval.objective(res.selection));
    }
}

TEST_CASE("one iteration keeps the better of start and its first sample") {
    const Scenario sc = testutil::random_scenario(95, 4, 6);
    PlanEvaluator probe(sc);
    Rng replay(123);
    const Selection first = sample_neighbor(Selection::start_only(6), 3, replay);
    const double expect =
        std::min(probe.objective(Selection::start_only(6)), probe.objective(first));
    const SearchResult res = local_search(sc, 1, 3, 123);
    CHECK(res.value == expect);
}

TEST_CASE("search replays as a monotone accept-if-not-worse walk") {
    const Scenario sc = testutil::random_scenario(96, 6, 8);
    const int iters = 30;
    const uint64_t seed = 7;

    PlanEvaluator eval(sc);
    Rng rng(seed);
    Selection current = Selection::start_only(8);
    double value = eval.objective(current);
    for (int i = 0; i < iters; ++i) {
        const Selection cand = sample_neighbor(current, 3, rng);
        const double v = eval.objective(cand);
        if (v <= value) {
            current = cand;
            value = v;  // the walk never goes uphill
        }
    }

    const SearchResult res = local_search(sc, iters, 3, seed);
    CHECK(res.value == value);
    CHECK(res.selection == current);
}

TEST_CASE("single-vertex instances return the only plan") {
    const Scenario sc = testutil::random_scenario(97, 3, 1);
    PlanEvaluator eval(sc);
    const SearchResult res = local_search(sc, 10, 3, 5);
    CHECK(res.selection == Selection::start_only(1));
    CHECK(res.value == eval.objective(Selection::start_only(1)));
    CHECK(res.evals == 0);
}
