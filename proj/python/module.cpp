#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ugvplan/bnb.hpp"
#include "ugvplan/experiments.hpp"
#include "ugvplan/gen.hpp"
#include "ugvplan/inner.hpp"
#include "ugvplan/io.hpp"
#include "ugvplan/model.hpp"
#include "ugvplan/oracle.hpp"

namespace py = pybind11;
using namespace ugvplan;

namespace {

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r)
        rows[r].assign(m.data.begin() + static_cast<size_t>(r) * m.cols,
                       m.data.begin() + static_cast<size_t>(r + 1) * m.cols);
    return rows;
}

SolveReport solve_py(const Scenario& sc, const std::string& init, int ls_iters, uint64_t seed) {
    SolveOptions opt;
    if (init == "local-search")
        opt.warm_start = WarmStart::LocalSearch;
    else if (init != "naive")
        throw std::invalid_argument("solve: init must be 'naive' or 'local-search'");
    opt.ls_iters = ls_iters;
    opt.seed = seed;
    return solve(sc, opt);
}

}  // namespace

PYBIND11_MODULE(_ugvplan, m) {
    m.doc() = "Minimum-energy vehicle data collection planner";

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("vertex_count", &Scenario::vertex_count)
        .def_readonly("user_count", &Scenario::user_count)
        .def_readonly("qos", &Scenario::qos)
        .def_readonly("time_budget", &Scenario::time_budget)
        .def_readonly("speed", &Scenario::speed)
        .def_readonly("alpha1", &Scenario::alpha1)
        .def_readonly("alpha2", &Scenario::alpha2)
        .def_readonly("mu", &Scenario::mu)
        .def_readonly("noise_dbm", &Scenario::noise_dbm)
        .def_property_readonly("dist", [](const Scenario& sc) { return matrix_rows(sc.dist); })
        .def_property_readonly("gains", [](const Scenario& sc) { return matrix_rows(sc.gains); })
        .def("validate", &Scenario::validate)
        .def("to_json", [](const Scenario& sc) { return io::scenario_to_json(sc); })
        .def_static("from_json", [](const std::string& text) { return io::scenario_from_json(text); });

    py::class_<SolveReport>(m, "SolveReport")
        .def_readonly("objective", &SolveReport::objective)
        .def_readonly("motion_energy", &SolveReport::motion_energy)
        .def_readonly("comm_energy", &SolveReport::comm_energy)
        .def_readonly("feasible", &SolveReport::feasible)
        .def_property_readonly("selection", [](const SolveReport& r) { return r.selection.bits; })
        .def_property_readonly("tour_order", [](const SolveReport& r) { return r.tour.order; })
        .def_property_readonly("tour_length", [](const SolveReport& r) { return r.tour.length; })
        .def_property_readonly("comm_time", [](const SolveReport& r) { return r.tour.comm_time; })
        .def_property_readonly("serve", [](const SolveReport& r) { return r.alloc.serve; })
        .def_property_readonly("seconds", [](const SolveReport& r) { return r.alloc.s; })
        .def_property_readonly("watts", [](const SolveReport& r) { return r.alloc.q; })
        .def_property_readonly("bound_evals", [](const SolveReport& r) { return r.stats.bound_evals; })
        .def_property_readonly("leaf_evals", [](const SolveReport& r) { return r.stats.leaf_evals; })
        .def("to_json", [](const SolveReport& r) { return io::report_to_json(r); });

    m.def(
        "generate_scenario",
        [](int users, int vertices, double noise_dbm, double time_budget, double qos_min,
           double qos_max, double mu, double map_side, double speed, uint64_t seed) {
            GenParams gp;
            gp.users = users;
            gp.vertices = vertices;
            gp.noise_dbm = noise_dbm;
            gp.time_budget = time_budget;
            gp.qos_min = qos_min;
            gp.qos_max = qos_max;
            gp.mu = mu;
            gp.map_side = map_side;
            gp.speed = speed;
            gp.seed = seed;
            return generate_scenario(gp);
        },
        py::arg("users") = 50, py::arg("vertices") = 12, py::arg("noise_dbm") = -95.0,
        py::arg("time_budget") = 500.0, py::arg("qos_min") = 1.0, py::arg("qos_max") = 2.0,
        py::arg("mu") = 1.0, py::arg("map_side") = 20.0, py::arg("speed") = 1.0,
        py::arg("seed") = 0);

    m.def("solve", &solve_py, py::arg("scenario"), py::arg("init") = "naive",
          py::arg("ls_iters") = 20, py::arg("seed") = 0,
          "Provably minimum-energy plan for one scenario");
    m.def("baseline", &baseline_plan, py::arg("scenario"), py::arg("scheme"),
          "Reference plan: scheme is 'no-move' or 'full-path'");
    m.def(
        "exhaustive",
        [](const Scenario& sc) {
            auto [value, sel] = oracle::exhaustive_best(sc);
            return std::make_pair(value, sel.bits);
        },
        py::arg("scenario"), "Exact optimum by enumerating every selection (at most 16 vertices)");
    m.def(
        "run_sweep",
        [](const std::string& kind, const std::vector<double>& grid, int runs, uint64_t seed,
           int users, int vertices) {
            SweepConfig cfg;
            cfg.kind = kind;
            cfg.grid = grid;
            cfg.runs = runs;
            cfg.seed = seed;
            cfg.users = users;
            cfg.vertices = vertices;
            return run_sweep(cfg);
        },
        py::arg("kind"), py::arg("grid"), py::arg("runs") = 20, py::arg("seed") = 0,
        py::arg("users") = 12, py::arg("vertices") = 8, "Experiment sweep, returns CSV text");

    m.def("unit_energy", &unit_energy, py::arg("x"));
    m.def("unit_energy_saving", &unit_energy_saving, py::arg("x"));
    m.def("time_for_saving", &time_for_saving, py::arg("y"));
    m.def("dbm_to_watts", &dbm_to_watts, py::arg("dbm"));
}
