#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "hardness.hpp"
#include "quantum.hpp"
#include "solver.hpp"

namespace udmis::io {

using Json = nlohmann::ordered_json;

inline std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

inline Json parse_json(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::runtime_error(what + ": " + e.what());
    }
}

inline Json read_json(const std::filesystem::path &path) { return parse_json(read_text(path), path.string()); }

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- instances

inline Json to_json(const Instance &inst) {
    const Graph &g = inst.graph;
    Json j;
    j["name"] = inst.meta.name;
    j["seed"] = inst.meta.seed;
    j["generator"] = inst.meta.generator;
    Json params;
    params["n"] = g.n();
    params["rho"] = inst.meta.rho;
    params["radius"] = inst.disk_radius;
    if (inst.meta.spacing_um) params["spacing_um"] = *inst.meta.spacing_um;
    if (!inst.meta.layout.empty()) params["layout"] = inst.meta.layout;
    j["params"] = params;
    if (inst.positions) {
        Json pos = Json::array();
        for (auto p : *inst.positions) pos.push_back({p.x, p.y});
        j["positions"] = pos;
    }
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    j["weights"] = g.weights();
    return j;
}

inline Instance instance_from_json(const Json &j) {
    try {
        Instance inst;
        const Json &params = j.at("params");
        const auto n = params.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be [i, j] pairs");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        std::optional<std::vector<double>> weights;
        if (j.contains("weights")) weights = j["weights"].get<std::vector<double>>();
        inst.graph = build_graph(n, edges, weights);
        inst.meta.name = j.value("name", std::string{});
        inst.meta.seed = j.value("seed", std::uint64_t{0});
        inst.meta.generator = j.value("generator", std::string{});
        inst.meta.rho = params.value("rho", 1.0);
        inst.meta.layout = params.value("layout", std::string{});
        if (params.contains("spacing_um")) inst.meta.spacing_um = params["spacing_um"].get<double>();
        inst.disk_radius = params.value("radius", 1.0);
        if (j.contains("positions")) {
            std::vector<Point> pts;
            for (const auto &p : j["positions"]) {
                if (!p.is_array() || p.size() != 2) throw std::invalid_argument("positions must be [x, y] pairs");
                pts.push_back({p[0].get<double>(), p[1].get<double>()});
            }
            if (pts.size() != n)
                throw std::invalid_argument("positions has " + std::to_string(pts.size()) + " entries, expected " +
                                            std::to_string(n));
            inst.positions = std::move(pts);
            if (!geometry_consistent(inst))
                throw std::invalid_argument("edge set does not match positions and radius");
        }
        return inst;
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
    }
}

inline Instance read_instance(const std::filesystem::path &path) {
    try {
        return instance_from_json(read_json(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

inline void write_instance(const std::filesystem::path &path, const Instance &inst) {
    write_text(path, dump(to_json(inst)));
}

// DIMACS edge format, 1-indexed. Weight lines are written only when some
// weight differs from 1.
inline std::string to_dimacs(const Graph &g) {
    std::ostringstream out;
    out.precision(17);
    out << "p edge " << g.n() << ' ' << g.num_edges() << '\n';
    for (auto [a, b] : g.edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
    bool weighted = false;
    for (double w : g.weights()) weighted = weighted || w != 1.0;
    if (weighted)
        for (Vertex v = 0; v < g.n(); ++v) out << "n " << v + 1 << ' ' << g.weight(v) << '\n';
    return out.str();
}

inline Graph from_dimacs(std::istream &in) {
    std::string line;
    std::size_t n = 0;
    bool header = false;
    std::vector<Edge> edges;
    std::vector<double> weights;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        auto fail = [&](const std::string &msg) {
            throw std::invalid_argument("DIMACS line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "p") {
            std::string fmt;
            std::size_t m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge") fail("expected 'p edge n m'");
            header = true;
            weights.assign(n, 1.0);
        } else if (!header) {
            fail("record before 'p' header");
        } else if (tag == "e") {
            std::size_t a = 0, b = 0;
            if (!(ls >> a >> b) || a == 0 || b == 0) fail("expected 'e i j' with 1-based indices");
            edges.emplace_back(a - 1, b - 1);
        } else if (tag == "n") {
            std::size_t v = 0;
            double w = 0.0;
            if (!(ls >> v >> w) || v == 0 || v > n) fail("expected 'n i w' with 1-based index");
            weights[v - 1] = w;
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    if (!header) throw std::invalid_argument("DIMACS input has no 'p edge' header");
    return build_graph(n, edges, weights);
}

// ------------------------------------------------------------------ reports

inline Json to_json(const SolveReport &r) {
    Json j;
    j["optimum"] = r.optimum;
    j["solution"] = r.solution;
    j["ticks"] = r.ticks;
    j["bb_nodes"] = r.bb_nodes;
    j["lp_root"] = r.lp_root;
    j["root_gap_pct"] = r.root_gap_pct;
    j["optimal"] = r.optimal;
    return j;
}

inline SolveReport solve_report_from_json(const Json &j) {
    SolveReport r;
    r.optimum = j.at("optimum").get<double>();
    r.solution = j.at("solution").get<std::vector<Vertex>>();
    r.ticks = j.at("ticks").get<std::uint64_t>();
    r.bb_nodes = j.value("bb_nodes", std::uint64_t{0});
    r.lp_root = j.value("lp_root", 0.0);
    r.root_gap_pct = j.value("root_gap_pct", 0.0);
    r.optimal = j.value("optimal", true);
    return r;
}

inline Json to_json(const HardnessReport &r) {
    Json j;
    j["fill_density"] = r.fill_density;
    j["geometric_density"] = r.geometric_density ? Json(*r.geometric_density) : Json(nullptr);
    j["treewidth_est"] = r.treewidth_est;
    j["thickness_est"] = r.thickness_est ? Json(*r.thickness_est) : Json(nullptr);
    j["component_sizes"] = r.component_sizes;
    return j;
}

// ---------------------------------------------------------------- schedules

inline Json to_json(const Schedule &s) {
    Json j;
    j["duration_us"] = s.duration_us;
    Json om = Json::array(), de = Json::array();
    for (auto [t, v] : s.omega) om.push_back({t, v});
    for (auto [t, v] : s.delta) de.push_back({t, v});
    j["omega"] = om;
    j["delta"] = de;
    return j;
}

inline Schedule schedule_from_json(const Json &j) {
    try {
        Schedule s;
        s.duration_us = j.at("duration_us").get<double>();
        auto points = [](const Json &arr) {
            std::vector<std::pair<double, double>> pts;
            for (const auto &p : arr) {
                if (!p.is_array() || p.size() != 2) throw std::invalid_argument("control points must be [t, value]");
                pts.emplace_back(p[0].get<double>(), p[1].get<double>());
            }
            return pts;
        };
        s.omega = points(j.at("omega"));
        s.delta = points(j.at("delta"));
        validate_schedule(s);
        return s;
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule JSON: ") + e.what());
    }
}

// --------------------------------------------------------------- samplesets

inline Json to_json(const SampleSet &s) {
    Json j;
    j["shots"] = s.total_shots;
    Json counts = Json::object();
    for (const auto &[bits, c] : s.counts) counts[bits] = c;
    j["counts"] = counts;
    return j;
}

inline SampleSet sampleset_from_json(const Json &j) {
    try {
        SampleSet s;
        s.total_shots = j.at("shots").get<std::uint64_t>();
        std::uint64_t sum = 0;
        std::size_t len = 0;
        for (const auto &[bits, c] : j.at("counts").items()) {
            if (len == 0) len = bits.size();
            if (bits.size() != len) throw std::invalid_argument("bitstrings have different lengths");
            (void)from_bitstring(bits);
            s.counts[bits] = c.get<std::uint64_t>();
            sum += s.counts[bits];
        }
        if (sum != s.total_shots)
            throw std::invalid_argument("counts sum to " + std::to_string(sum) + " but shots is " +
                                        std::to_string(s.total_shots));
        return s;
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed sample set JSON: ") + e.what());
    }
}

inline Json to_json(const Distribution &d) {
    Json j = Json::object();
    for (const auto &[bits, p] : d) j[bits] = p;
    return j;
}

// -------------------------------------------------------------------- CSV

// 17 significant digits, '.' decimal point; non-finite values print as
// inf, -inf, nan.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_double(const std::string &s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string &name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::invalid_argument("CSV has no column '" + name + "'");
    }
    bool has_column(const std::string &name) const {
        for (const auto &h : header)
            if (h == name) return true;
        return false;
    }
};

// Plain comma-separated text without quoting (none of the emitted fields
// contain commas or quotes).
inline std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline CsvTable read_csv(std::istream &in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("CSV input is empty");
    t.header = split_csv_line(line);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto row = split_csv_line(line);
        if (row.size() != t.header.size())
            throw std::invalid_argument("CSV line " + std::to_string(lineno) + " has " + std::to_string(row.size()) +
                                        " fields, header has " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::string join_csv(const std::vector<std::string> &fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) s += ',';
        s += fields[i];
    }
    return s;
}

}  // namespace udmis::io
