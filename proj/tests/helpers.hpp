#pragma once

#include <cstdint>
#include <vector>

#include "ugvplan/gen.hpp"
#include "ugvplan/types.hpp"

namespace testutil {

// Small random instance for property tests. Physics parameters follow the
// generator defaults so the numbers stay in a realistic range.
inline ugvplan::Scenario random_scenario(uint64_t seed, int users, int vertices) {
    ugvplan::GenParams gp;
    gp.seed = seed;
    gp.users = users;
    gp.vertices = vertices;
    return ugvplan::generate_scenario(gp);
}

// Square nonnegative cost matrix with zero diagonal. inf_prob controls the
// share of off-diagonal entries replaced by +inf (missing edges).
inline ugvplan::Matrix random_cost(int n, ugvplan::Rng& rng, double inf_prob = 0.0,
                                   double lo = 0.1, double hi = 10.0) {
    ugvplan::Matrix m(n, n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            m(i, j) = rng.uniform() < inf_prob ? ugvplan::kInf : rng.uniform(lo, hi);
        }
    }
    return m;
}

// Asymmetric distance matrix suitable for Scenario::dist.
inline ugvplan::Matrix random_dist(int n, ugvplan::Rng& rng, double inf_prob = 0.0) {
    return random_cost(n, rng, inf_prob, 0.5, 25.0);
}

inline std::vector<double> random_qos(int users, ugvplan::Rng& rng, double lo = 1.0,
                                      double hi = 2.0) {
    std::vector<double> q(users);
    for (auto& x : q) x = rng.uniform(lo, hi);
    return q;
}

}  // namespace testutil
