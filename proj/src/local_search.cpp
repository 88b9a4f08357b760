#include "ugvplan/local_search.hpp"

#include <algorithm>

namespace ugvplan {

Selection sample_neighbor(const Selection& sel, int radius, Rng& rng) {
    sel.validate();
    const int m = sel.size();
    if (m < 2) throw std::invalid_argument("sample_neighbor: selection has no neighbors");
    if (radius < 1) throw std::invalid_argument("sample_neighbor: radius must be >= 1");

    const int max_flips = std::min(radius, m - 1);
    const int flips = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(max_flips)));

    // Partial Fisher-Yates over the non-start coordinates.
    std::vector<int> coords(m - 1);
    for (int i = 0; i < m - 1; ++i) coords[i] = i + 1;
    Selection out = sel;
    for (int i = 0; i < flips; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<uint32_t>(m - 1 - i)));
        std::swap(coords[i], coords[j]);
        out.bits[coords[i]] ^= 1;
    }
    return out;
}

SearchResult local_search(PlanEvaluator& eval, int max_iters, int radius, Rng& rng) {
    if (max_iters < 1) throw std::invalid_argument("local_search: max_iters must be >= 1");
    const Scenario& sc = eval.scenario();
    Selection current = Selection::start_only(sc.vertex_count);
    double current_value = eval.objective(current);

    SearchResult res;
    if (sc.vertex_count < 2) {
        res.value = current_value;
        res.selection = current;
        return res;
    }
    for (int iter = 0; iter < max_iters; ++iter) {
        const Selection candidate = sample_neighbor(current, radius, rng);
        const double value = eval.objective(candidate);
        ++res.evals;
        if (value <= current_value) {
            current = candidate;
            current_value = value;
        }
    }
    res.value = current_value;
    res.selection = current;
    return res;
}

SearchResult local_search(const Scenario& sc, int max_iters, int radius, uint64_t seed) {
    PlanEvaluator eval(sc);
    Rng rng(seed);
    return local_search(eval, max_iters, radius, rng);
}

}  // namespace ugvplan
