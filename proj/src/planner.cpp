#include "ugvplan/planner.hpp"

#include "ugvplan/inner.hpp"
#include "ugvplan/model.hpp"

namespace ugvplan {

PlanDetail evaluate_selection(const Selection& sel, const Scenario& sc, TourCache& tours) {
    sel.validate();
    if (sel.size() != sc.vertex_count) throw std::invalid_argument("evaluate_selection: selection size mismatch");

    PlanDetail out;
    out.tour = tours.get(sel);
    if (!out.tour.reachable() || !(out.tour.comm_time > 0.0)) return out;

    out.alloc = allocate(sel, sc, out.tour.comm_time);
    out.motion_energy = motion_energy(out.tour.length, sc.alpha1, sc.alpha2, sc.speed);
    out.comm_energy = 0.0;
    for (int k = 0; k < sc.user_count; ++k) out.comm_energy += out.alloc.s[k] * out.alloc.q[k];
    out.objective = sc.mu * out.motion_energy + (2.0 - sc.mu) * out.comm_energy;
    out.feasible = true;
    return out;
}

double PlanEvaluator::objective(uint32_t mask) {
    auto it = value_.find(mask);
    if (it != value_.end()) return it->second;
    ++fresh_evals_;
    const Selection sel = Selection::from_mask(sc_->vertex_count, mask);
    const double obj = evaluate_selection(sel, *sc_, tours_).objective;
    value_.emplace(mask, obj);
    return obj;
}

}  // namespace ugvplan
