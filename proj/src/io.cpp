#include "ugvplan/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ugvplan::io {

using nlohmann::json;

std::string format_double(double x) {
    if (x == kInf) return "inf";
    if (x == -kInf) return "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

json matrix_to_json(const Matrix& mat) {
    json arr = json::array();
    for (double x : mat.data) {
        if (x == kInf)
            arr.push_back("inf");
        else
            arr.push_back(x);
    }
    return arr;
}

Matrix matrix_from_json(const json& arr, int rows, int cols, const char* name) {
    if (!arr.is_array() || arr.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument(std::string("scenario_from_json: bad shape for ") + name);
    Matrix mat(rows, cols);
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& cell = arr[i];
        if (cell.is_string()) {
            if (cell.get<std::string>() != "inf")
                throw std::invalid_argument(std::string("scenario_from_json: unknown string entry in ") + name);
            mat.data[i] = kInf;
        } else if (cell.is_number()) {
            mat.data[i] = cell.get<double>();
        } else {
            throw std::invalid_argument(std::string("scenario_from_json: non-numeric entry in ") + name);
        }
    }
    return mat;
}

json points_to_json(const std::vector<std::array<double, 2>>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(json::array({p[0], p[1]}));
    return arr;
}

std::vector<std::array<double, 2>> points_from_json(const json& arr) {
    std::vector<std::array<double, 2>> pts;
    for (const json& p : arr) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("scenario_from_json: bad position entry");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
    json doc;
    doc["M"] = sc.vertex_count;
    doc["K"] = sc.user_count;
    doc["D"] = matrix_to_json(sc.dist);
    doc["A"] = matrix_to_json(sc.gains);
    doc["gamma"] = sc.qos;
    doc["T"] = sc.time_budget;
    doc["a"] = sc.speed;
    doc["alpha1"] = sc.alpha1;
    doc["alpha2"] = sc.alpha2;
    doc["mu"] = sc.mu;
    doc["N0_dbm"] = sc.noise_dbm;
    doc["beta"] = sc.beta;
    doc["eta"] = sc.eta;
    if (!sc.vertex_pos.empty() || !sc.user_pos.empty()) {
        doc["positions"] = {{"vertices", points_to_json(sc.vertex_pos)},
                            {"users", points_to_json(sc.user_pos)}};
    }
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    const json doc = json::parse(text);
    for (const char* key : {"M", "K", "D", "A", "gamma", "T", "a", "alpha1", "alpha2", "mu", "N0_dbm", "beta", "eta"})
        if (!doc.contains(key)) throw std::invalid_argument(std::string("scenario_from_json: missing key ") + key);

    Scenario sc;
    sc.vertex_count = doc["M"].get<int>();
    sc.user_count = doc["K"].get<int>();
    sc.dist = matrix_from_json(doc["D"], sc.vertex_count, sc.vertex_count, "D");
    sc.gains = matrix_from_json(doc["A"], sc.user_count, sc.vertex_count, "A");
    sc.qos = doc["gamma"].get<std::vector<double>>();
    sc.time_budget = doc["T"].get<double>();
    sc.speed = doc["a"].get<double>();
    sc.alpha1 = doc["alpha1"].get<double>();
    sc.alpha2 = doc["alpha2"].get<double>();
    sc.mu = doc["mu"].get<double>();
    sc.noise_dbm = doc["N0_dbm"].get<double>();
    sc.beta = doc["beta"].get<double>();
    sc.eta = doc["eta"].get<double>();
    if (doc.contains("positions")) {
        const json& pos = doc["positions"];
        if (pos.contains("vertices")) sc.vertex_pos = points_from_json(pos["vertices"]);
        if (pos.contains("users")) sc.user_pos = points_from_json(pos["users"]);
    }
    sc.validate();
    return sc;
}

std::string report_to_json(const SolveReport& report) {
    json doc;
    doc["objective_j"] = report.objective;
    doc["feasible"] = report.feasible;
    doc["motion_energy_j"] = report.motion_energy;
    doc["comm_energy_j"] = report.comm_energy;
    doc["selection"] = report.selection.bits;
    doc["tour_order"] = report.tour.order;
    doc["tour_length_m"] = report.tour.length == kInf ? json("inf") : json(report.tour.length);
    doc["comm_time_s"] = report.tour.comm_time == -kInf ? json("-inf") : json(report.tour.comm_time);
    json users = json::array();
    for (size_t k = 0; k < report.alloc.serve.size(); ++k) {
        users.push_back({{"serve", report.alloc.serve[k]},
                         {"time_s", report.alloc.s[k]},
                         {"power_w", report.alloc.q[k]}});
    }
    doc["users"] = users;
    doc["multiplier"] = report.alloc.rho;
    doc["stats"] = {{"bound_evals", report.stats.bound_evals},
                    {"leaf_evals", report.stats.leaf_evals},
                    {"iterations", report.stats.iterations},
                    {"wall_seconds", report.stats.wall_seconds}};
    return doc.dump(2) + "\n";
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::string out = "iteration,pool_nodes,pool_candidates,incumbent_j\n";
    for (const TraceRow& row : trace) {
        out += std::to_string(row.iteration);
        out += ',';
        out += std::to_string(row.pool_nodes);
        out += ',';
        out += format_double(row.pool_candidates);
        out += ',';
        out += format_double(row.incumbent);
        out += '\n';
    }
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Scenario load_scenario(const std::string& path) {
    return scenario_from_json(read_text(path));
}

}  // namespace ugvplan::io
