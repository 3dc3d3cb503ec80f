#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "hardness.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "quantum.hpp"
#include "random.hpp"
#include "solver.hpp"
#include "weighting.hpp"

namespace udmis {

// ------------------------------------------------------------------ metrics

// Shots needed to see the optimum at least once with 99% confidence.
inline double tts_q(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("tts_q needs p in [0, 1), got " + std::to_string(p));
    if (p >= 0.99) return 1.0;
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    return std::log(0.01) / std::log1p(-p);
}

// Relative distance |(x - x*) / x*|.
inline double gap(double value, double optimum) {
    if (optimum == 0.0) throw std::invalid_argument("gap is undefined for a zero optimum");
    return std::abs((value - optimum) / optimum);
}

// Weight of the bitstring when it is an independent set, 0 otherwise.
inline double shot_value(const Graph &g, const std::string &bits) {
    Assignment x = to_assignment(bits);
    if (x.size() != g.n()) throw std::invalid_argument("bitstring length does not match graph");
    return is_independent_set(g, x) ? assignment_weight(g, x) : 0.0;
}

inline bool is_optimal_shot(const Graph &g, const std::string &bits, double optimum) {
    Assignment x = to_assignment(bits);
    if (x.size() != g.n()) throw std::invalid_argument("bitstring length does not match graph");
    return is_independent_set(g, x) && same_value(assignment_weight(g, x), optimum);
}

// Fraction of the mass (shots or probability) on optimal independent sets.
template <class Value>
double p_mis(const std::map<std::string, Value> &m, const Graph &g, double optimum) {
    double hit = 0.0, total = 0.0;
    for (const auto &[bits, v] : m) {
        total += static_cast<double>(v);
        if (is_optimal_shot(g, bits, optimum)) hit += static_cast<double>(v);
    }
    return total > 0.0 ? hit / total : 0.0;
}

inline double p_mis(const SampleSet &s, const Graph &g, double optimum) { return p_mis(s.counts, g, optimum); }

// Mass-weighted mean gap.
template <class Value>
double average_gap(const std::map<std::string, Value> &m, const Graph &g, double optimum) {
    double acc = 0.0, total = 0.0;
    for (const auto &[bits, v] : m) {
        total += static_cast<double>(v);
        acc += static_cast<double>(v) * gap(shot_value(g, bits), optimum);
    }
    if (!(total > 0.0)) throw std::invalid_argument("average gap of an empty sample");
    return acc / total;
}

// Mean gap over the best ceil(keep_fraction * shots) shots, ordered by QUBO
// cost (ties: bitstring).
inline double truncated_avg_gap(const SampleSet &s, const Graph &g, double optimum, double keep_fraction,
                                std::optional<double> alpha = std::nullopt) {
    if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) throw std::invalid_argument("keep_fraction must be in (0, 1]");
    if (s.total_shots == 0) throw std::invalid_argument("truncated gap of an empty sample");
    const double a = alpha.value_or(default_penalty(g));
    struct Entry {
        double cost;
        const std::string *bits;
        std::uint64_t count;
        double gap;
    };
    std::vector<Entry> entries;
    for (const auto &[bits, c] : s.counts)
        entries.push_back({qubo_cost(g, to_assignment(bits), a), &bits, c, gap(shot_value(g, bits), optimum)});
    std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) {
        if (x.cost != y.cost) return x.cost < y.cost;
        return *x.bits < *y.bits;
    });
    auto keep = static_cast<std::uint64_t>(std::ceil(keep_fraction * static_cast<double>(s.total_shots) - 1e-9));
    keep = std::clamp<std::uint64_t>(keep, 1, s.total_shots);
    double acc = 0.0;
    std::uint64_t left = keep;
    for (const auto &e : entries) {
        const std::uint64_t take = std::min(left, e.count);
        acc += static_cast<double>(take) * e.gap;
        left -= take;
        if (left == 0) break;
    }
    return acc / static_cast<double>(keep);
}

// --------------------------------------------------------------- benchmark

struct QuantumStage {
    bool enabled = false;
    std::size_t max_n = 14;
    std::uint64_t shots = 1000;
    std::optional<Schedule> schedule;  // default_schedule() when absent
    double duration_factor = 1.0;
    double dt = kDefaultDtUs;
    std::optional<NoiseModel> noise;
    bool mitigate = false;
    bool repair = true;
    std::vector<double> keep_fractions{1.0, 0.5, 0.25, 0.1};
};

struct BenchConfig {
    std::string generator = "native";  // native | box | kings
    LayoutKind layout_kind = LayoutKind::triangular;
    std::size_t layout_traps = kDefaultTrapCount;
    double spacing_um = kDefaultSpacingUm;
    std::vector<std::size_t> sizes{25};  // atoms (native, box) or lattice side (kings)
    std::vector<double> rhos{1.0};
    std::vector<double> rewire{0.0};
    std::vector<WeightKind> schemes{WeightKind::unweighted};
    std::size_t seeds = 5;
    std::uint64_t master_seed = 1;
    double delta_bar = 1000.0;
    std::optional<std::uint64_t> budget_ticks;
    bool compute_lp = true;
    bool treewidth = false;
    QuantumStage quantum;
};

struct MetricRow {
    std::string instance_id;
    std::string generator;
    std::size_t N = 0;
    double rho = 1.0;
    double rewire = 0.0;
    std::string scheme;
    std::size_t replicate = 0;
    std::uint64_t instance_seed = 0;
    std::uint64_t scheme_seed = 0;
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    std::uint64_t ticks = 0;
    std::uint64_t bb_nodes = 0;
    bool optimal = true;
    double optimum = 0.0;
    double lp_root = 0.0;
    double root_gap_pct = 0.0;
    std::optional<std::size_t> treewidth;
    std::optional<double> p_mis;
    std::optional<double> tts_q;
    std::optional<double> avg_gap;
    std::map<double, double> truncated_gaps;
};

namespace detail {

inline std::uint64_t bits_of(double v) { return std::bit_cast<std::uint64_t>(v); }

inline const std::set<std::string> &known_generators() {
    static const std::set<std::string> g{"native", "box", "kings"};
    return g;
}

}  // namespace detail

// Seed splitting. The graph of replicate r depends on (master, generator,
// N, rho, rewire fraction, r) so every scheme of a cell weights the same
// graph; weights and shot sampling use a seed that also mixes in the scheme.
inline std::uint64_t instance_seed(const BenchConfig &c, std::size_t n, double rho, double rewire, std::size_t rep) {
    const std::uint64_t w[] = {c.master_seed, hash_string(c.generator), n, detail::bits_of(rho),
                               detail::bits_of(rewire), rep};
    return hash_words(w);
}

inline std::uint64_t scheme_seed(const BenchConfig &c, std::size_t n, double rho, double rewire, WeightKind k,
                                 std::size_t rep) {
    const std::uint64_t w[] = {c.master_seed, n, detail::bits_of(rho), hash_string(to_string(k)),
                               rep, detail::bits_of(rewire)};
    return hash_words(w);
}

inline void validate_config(const BenchConfig &c) {
    if (!detail::known_generators().count(c.generator))
        throw std::invalid_argument("unknown generator '" + c.generator + "' (expected native, box or kings)");
    if (c.sizes.empty() || c.rhos.empty() || c.rewire.empty() || c.schemes.empty())
        throw std::invalid_argument("sizes, rho, rewire and schemes must be non-empty");
    if (c.seeds == 0) throw std::invalid_argument("seeds must be positive");
    for (double r : c.rhos)
        if (!(r > 0.0 && r <= 1.0) && c.generator == "native")
            throw std::invalid_argument("native fill density must be in (0, 1]");
    for (double r : c.rhos)
        if (!(r > 0.0)) throw std::invalid_argument("rho must be positive");
    for (double f : c.rewire)
        if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("rewire fractions must be in [0, 1]");
    for (double f : c.quantum.keep_fractions)
        if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("keep fractions must be in (0, 1]");
    if (c.quantum.noise) validate_noise(*c.quantum.noise);
    if (c.quantum.mitigate && !c.quantum.noise) throw std::invalid_argument("mitigation requires a noise model");
    if (c.quantum.schedule) validate_schedule(*c.quantum.schedule);
    if (!(c.quantum.duration_factor > 0.0)) throw std::invalid_argument("duration_factor must be positive");
}

inline std::string cell_id(const BenchConfig &c, std::size_t n, double rho, double rewire, std::size_t rep) {
    std::string id = c.generator + "_N" + std::to_string(n);
    if (c.generator != "kings") id += "_rho" + format_param(rho);
    if (rewire > 0.0) id += "_f" + format_param(rewire);
    return id + "_r" + std::to_string(rep);
}

// The unweighted base instance of one cell. Rewired graphs drop their
// positions (the edge set is no longer geometric).
inline Instance make_cell_instance(const BenchConfig &c, std::size_t n, double rho, double rewire, std::size_t rep) {
    const std::uint64_t seed = instance_seed(c, n, rho, rewire, rep);
    Instance inst;
    if (c.generator == "native") {
        Layout layout = make_layout(c.layout_kind, c.layout_traps, c.spacing_um);
        inst = sample_native_instance(layout, n, rho, seed);
    } else if (c.generator == "box") {
        inst = random_udg_box(n, rho, seed);
    } else {
        inst = kings_lattice(n, n);
        inst.meta.seed = seed;
    }
    if (rewire > 0.0) {
        inst.graph = udmis::rewire(inst.graph, rewire, mix64(seed));
        inst.positions.reset();
        inst.meta.generator += "+rewire";
    }
    inst.meta.name = cell_id(c, n, rho, rewire, rep);
    return inst;
}

namespace detail {

struct Cell {
    std::size_t n;
    double rho;
    double rewire;
    std::size_t rep;
};

inline std::vector<Cell> cells(const BenchConfig &c) {
    std::vector<Cell> out;
    for (auto n : c.sizes)
        for (double rho : c.generator == "kings" ? std::vector<double>{1.0} : c.rhos)
            for (double f : c.rewire)
                for (std::size_t r = 0; r < c.seeds; ++r) out.push_back({n, rho, f, r});
    return out;
}

inline void quantum_metrics(const BenchConfig &c, const Instance &weighted, std::uint64_t seed, MetricRow &row) {
    const QuantumStage &q = c.quantum;
    const Graph &g = weighted.graph;
    Schedule sched = q.schedule.value_or(default_schedule()).scaled(q.duration_factor);
    auto h = build_hamiltonian(weighted, sched);
    auto ev = evolve(h, q.dt);
    std::vector<double> dist = probabilities(ev.state);
    if (q.noise) dist = apply_readout_noise(dist, *q.noise);
    const SampleSet raw = sample_distribution(dist, g.n(), q.shots, mix64(seed ^ 0x5a17ULL));
    const SampleSet shots = q.repair ? repair_bitstrings(raw, g) : raw;

    if (q.mitigate) {
        auto mit = mitigate_readout(empirical_distribution(raw, g.n()), *q.noise);
        Distribution d = to_distribution(mit.clipped, g.n());
        if (q.repair) d = repair_bitstrings(d, g);
        row.p_mis = p_mis(d, g, row.optimum);
        row.avg_gap = average_gap(d, g, row.optimum);
    } else {
        row.p_mis = p_mis(shots, g, row.optimum);
        row.avg_gap = average_gap(shots.counts, g, row.optimum);
    }
    row.tts_q = *row.p_mis >= 0.99 ? 1.0 : tts_q(*row.p_mis);
    for (double f : q.keep_fractions) row.truncated_gaps[f] = truncated_avg_gap(shots, g, row.optimum, f);
}

inline std::vector<MetricRow> run_cell(const BenchConfig &c, const Cell &cell,
                                       const std::optional<std::filesystem::path> &cache_dir) {
    Instance base;
    std::optional<std::filesystem::path> cached;
    if (cache_dir) cached = *cache_dir / (cell_id(c, cell.n, cell.rho, cell.rewire, cell.rep) + "_" +
                                          std::to_string(instance_seed(c, cell.n, cell.rho, cell.rewire, cell.rep)) +
                                          ".json");
    if (cached && std::filesystem::exists(*cached)) {
        base = io::read_instance(*cached);
    } else {
        base = make_cell_instance(c, cell.n, cell.rho, cell.rewire, cell.rep);
        if (cached) {
            // Write-then-rename so concurrent runs never see a partial file.
            auto tmp = *cached;
            tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
            io::write_instance(tmp, base);
            std::filesystem::rename(tmp, *cached);
        }
    }
    std::optional<std::size_t> tw;
    if (c.treewidth) tw = minfill_treewidth(base.graph).width;

    std::vector<MetricRow> rows;
    for (WeightKind k : c.schemes) {
        MetricRow row;
        row.instance_id = base.meta.name;
        row.generator = c.generator;
        row.N = cell.n;
        row.rho = cell.rho;
        row.rewire = cell.rewire;
        row.scheme = to_string(k);
        row.replicate = cell.rep;
        row.instance_seed = instance_seed(c, cell.n, cell.rho, cell.rewire, cell.rep);
        row.scheme_seed = scheme_seed(c, cell.n, cell.rho, cell.rewire, k, cell.rep);
        Instance weighted = base;
        weighted.graph = apply_scheme(base.graph, {k, c.delta_bar, row.scheme_seed});
        const Graph &g = weighted.graph;
        row.n_vertices = g.n();
        row.n_edges = g.num_edges();
        SolveOptions opts;
        opts.budget_ticks = c.budget_ticks;
        opts.compute_lp = c.compute_lp;
        SolveReport r = solve_bb(g, opts);
        row.ticks = r.ticks;
        row.bb_nodes = r.bb_nodes;
        row.optimal = r.optimal;
        row.optimum = r.optimum;
        row.lp_root = r.lp_root;
        row.root_gap_pct = r.root_gap_pct;
        row.treewidth = tw;
        if (c.quantum.enabled && weighted.positions && g.n() <= c.quantum.max_n && r.optimal && r.optimum > 0.0)
            quantum_metrics(c, weighted, row.scheme_seed, row);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

struct BenchRunOptions {
    std::size_t workers = 1;
    std::optional<std::filesystem::path> cache_dir;
    // Called for every row in table order as soon as the prefix up to it is
    // complete; calls are serialized.
    std::function<void(const MetricRow &)> on_row;
};

// One row per (cell, scheme), ordered by sizes, rho, rewire, replicate and
// scheme as listed in the config, independent of the worker count.
inline std::vector<MetricRow> run_benchmark(const BenchConfig &c, const BenchRunOptions &opt = {}) {
    validate_config(c);
    if (opt.cache_dir) std::filesystem::create_directories(*opt.cache_dir);
    const auto work = detail::cells(c);
    std::vector<std::optional<std::vector<MetricRow>>> done(work.size());
    std::vector<MetricRow> out;
    std::size_t flushed = 0;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;

    auto flush = [&] {
        while (flushed < work.size() && done[flushed]) {
            for (auto &row : *done[flushed]) {
                if (opt.on_row) opt.on_row(row);
                out.push_back(std::move(row));
            }
            done[flushed].reset();
            ++flushed;
        }
    };
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            try {
                auto rows = detail::run_cell(c, work[i], opt.cache_dir);
                std::lock_guard lock(mu);
                done[i] = std::move(rows);
                flush();
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
                next.store(work.size());
                return;
            }
        }
    };
    const std::size_t nw = std::max<std::size_t>(1, std::min(opt.workers, work.size()));
    std::vector<std::thread> threads;
    for (std::size_t w = 1; w < nw; ++w) threads.emplace_back(worker);
    worker();
    for (auto &t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

// ---------------------------------------------------------------- CSV rows

inline std::vector<std::string> csv_header(const BenchConfig &c) {
    std::vector<std::string> h{"instance_id", "generator", "N",         "rho",          "rewire",    "scheme",
                               "replicate",   "instance_seed", "scheme_seed", "n_vertices", "n_edges", "ticks",
                               "bb_nodes",    "optimal",   "optimum",   "lp_root",      "root_gap_pct",
                               "treewidth",   "p_mis",     "tts_q",     "avg_gap"};
    for (double f : c.quantum.keep_fractions) h.push_back("trunc_gap_" + format_param(f));
    return h;
}

inline std::vector<std::string> csv_fields(const BenchConfig &c, const MetricRow &r) {
    using io::format_double;
    auto opt = [](const std::optional<double> &v) { return v ? format_double(*v) : std::string{}; };
    std::vector<std::string> f{r.instance_id,
                               r.generator,
                               std::to_string(r.N),
                               format_double(r.rho),
                               format_double(r.rewire),
                               r.scheme,
                               std::to_string(r.replicate),
                               std::to_string(r.instance_seed),
                               std::to_string(r.scheme_seed),
                               std::to_string(r.n_vertices),
                               std::to_string(r.n_edges),
                               std::to_string(r.ticks),
                               std::to_string(r.bb_nodes),
                               r.optimal ? "1" : "0",
                               format_double(r.optimum),
                               format_double(r.lp_root),
                               format_double(r.root_gap_pct),
                               r.treewidth ? std::to_string(*r.treewidth) : std::string{},
                               opt(r.p_mis),
                               opt(r.tts_q),
                               opt(r.avg_gap)};
    for (double k : c.quantum.keep_fractions) {
        auto it = r.truncated_gaps.find(k);
        f.push_back(it == r.truncated_gaps.end() ? std::string{} : format_double(it->second));
    }
    return f;
}

// ------------------------------------------------------------ config JSON

inline BenchConfig bench_config_from_json(const io::Json &j) {
    static const std::set<std::string> top{"generator", "layout",     "sizes",  "rho",    "rewire",  "schemes",
                                           "seeds",     "master_seed", "delta_bar", "solver", "treewidth", "quantum"};
    static const std::set<std::string> quantum_keys{"enabled", "max_n", "shots",    "schedule", "duration_factor",
                                                    "dt",      "noise", "mitigate", "repair",   "keep_fractions"};
    auto check_keys = [](const io::Json &obj, const std::set<std::string> &allowed, const std::string &where) {
        if (!obj.is_object()) throw std::invalid_argument(where + " must be a JSON object");
        for (const auto &[k, v] : obj.items())
            if (!allowed.count(k)) throw std::invalid_argument("unknown key '" + k + "' in " + where);
    };
    try {
        check_keys(j, top, "bench config");
        BenchConfig c;
        c.generator = j.value("generator", c.generator);
        if (j.contains("layout")) {
            const auto &l = j["layout"];
            check_keys(l, {"kind", "traps", "spacing_um"}, "layout");
            c.layout_kind = parse_layout_kind(l.value("kind", std::string("triangular")));
            c.layout_traps = l.value("traps", c.layout_traps);
            c.spacing_um = l.value("spacing_um", c.spacing_um);
        }
        if (j.contains("sizes")) c.sizes = j["sizes"].get<std::vector<std::size_t>>();
        if (j.contains("rho")) c.rhos = j["rho"].get<std::vector<double>>();
        if (j.contains("rewire")) c.rewire = j["rewire"].get<std::vector<double>>();
        if (j.contains("schemes")) {
            c.schemes.clear();
            for (const auto &s : j["schemes"]) c.schemes.push_back(parse_weight_kind(s.get<std::string>()));
        }
        c.seeds = j.value("seeds", c.seeds);
        c.master_seed = j.value("master_seed", c.master_seed);
        c.delta_bar = j.value("delta_bar", c.delta_bar);
        if (j.contains("solver")) {
            const auto &s = j["solver"];
            check_keys(s, {"budget_ticks", "lp"}, "solver");
            if (s.contains("budget_ticks") && !s["budget_ticks"].is_null())
                c.budget_ticks = s["budget_ticks"].get<std::uint64_t>();
            c.compute_lp = s.value("lp", c.compute_lp);
        }
        c.treewidth = j.value("treewidth", c.treewidth);
        if (j.contains("quantum")) {
            const auto &q = j["quantum"];
            check_keys(q, quantum_keys, "quantum");
            c.quantum.enabled = q.value("enabled", true);
            c.quantum.max_n = q.value("max_n", c.quantum.max_n);
            c.quantum.shots = q.value("shots", c.quantum.shots);
            if (q.contains("schedule") && !q["schedule"].is_null())
                c.quantum.schedule = io::schedule_from_json(q["schedule"]);
            c.quantum.duration_factor = q.value("duration_factor", c.quantum.duration_factor);
            c.quantum.dt = q.value("dt", c.quantum.dt);
            if (q.contains("noise") && !q["noise"].is_null()) {
                check_keys(q["noise"], {"p", "q"}, "quantum.noise");
                c.quantum.noise = NoiseModel{q["noise"].value("p", 0.0), q["noise"].value("q", 0.0)};
            }
            c.quantum.mitigate = q.value("mitigate", c.quantum.mitigate);
            c.quantum.repair = q.value("repair", c.quantum.repair);
            if (q.contains("keep_fractions"))
                c.quantum.keep_fractions = q["keep_fractions"].get<std::vector<double>>();
        }
        validate_config(c);
        return c;
    } catch (const io::Json::exception &e) {
        throw std::invalid_argument(std::string("malformed bench config: ") + e.what());
    }
}

// ----------------------------------------------------------------- reports

inline const std::vector<std::string> &report_figures() {
    static const std::vector<std::string> f{"fig1c", "fig2", "fig3", "figA2", "fig4b", "fig5"};
    return f;
}

namespace detail {

inline double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

inline double mean(const std::vector<double> &v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace detail

// Aggregates a results table into plot-ready long-format rows.
inline io::CsvTable make_report(const io::CsvTable &in, const std::string &figure) {
    using io::format_double;
    using io::parse_double;
    using detail::mean;
    using detail::median;
    io::CsvTable out;
    auto num = [&](const std::vector<std::string> &row, const std::string &col) {
        return parse_double(row[in.column(col)]);
    };
    auto str = [&](const std::vector<std::string> &row, const std::string &col) { return row[in.column(col)]; };
    // Groups rows by the listed key columns, keeping first-seen order.
    auto group = [&](const std::vector<std::string> &keys) {
        std::vector<std::pair<std::vector<std::string>, std::vector<const std::vector<std::string> *>>> groups;
        std::map<std::vector<std::string>, std::size_t> index;
        for (const auto &row : in.rows) {
            std::vector<std::string> k;
            for (const auto &c : keys) k.push_back(row[in.column(c)]);
            auto [it, fresh] = index.emplace(k, groups.size());
            if (fresh) groups.push_back({k, {}});
            groups[it->second].second.push_back(&row);
        }
        return groups;
    };
    auto column = [&](const std::vector<const std::vector<std::string> *> &rows, const std::string &col) {
        std::vector<double> v;
        for (auto *r : rows)
            if (!(*r)[in.column(col)].empty()) v.push_back(num(*r, col));
        return v;
    };
    auto emit = [&](std::vector<std::string> keys, std::vector<double> vals) {
        for (double v : vals) keys.push_back(format_double(v));
        out.rows.push_back(std::move(keys));
    };

    if (figure == "fig1c") {
        out.header = {"N", "rho", "median_ticks", "mean_ticks", "count", "truncated"};
        for (auto &[k, rows] : group({"N", "rho"})) {
            double trunc = 0;
            for (auto *r : rows) trunc += str(*r, "optimal") == "0";
            auto t = column(rows, "ticks");
            emit(k, {median(t), mean(t), static_cast<double>(rows.size()), trunc});
        }
    } else if (figure == "fig2") {
        out.header = {"N", "rho", "median_treewidth", "mean_treewidth", "count"};
        for (auto &[k, rows] : group({"N", "rho"})) {
            auto t = column(rows, "treewidth");
            emit(k, {median(t), mean(t), static_cast<double>(t.size())});
        }
    } else if (figure == "fig3") {
        out.header = {"N", "scheme", "mean_ticks", "median_ticks", "mean_root_gap_pct", "count"};
        for (auto &[k, rows] : group({"N", "scheme"})) {
            auto t = column(rows, "ticks");
            emit(k, {mean(t), median(t), mean(column(rows, "root_gap_pct")), static_cast<double>(rows.size())});
        }
    } else if (figure == "figA2") {
        out.header = {"N", "rewire", "median_ticks", "mean_ticks", "median_treewidth", "count", "truncated"};
        for (auto &[k, rows] : group({"N", "rewire"})) {
            double trunc = 0;
            for (auto *r : rows) trunc += str(*r, "optimal") == "0";
            auto t = column(rows, "ticks");
            emit(k, {median(t), mean(t), median(column(rows, "treewidth")), static_cast<double>(rows.size()), trunc});
        }
    } else if (figure == "fig4b") {
        out.header = {"N", "scheme", "keep_fraction", "mean_gap", "count"};
        std::vector<std::pair<std::string, double>> cols;
        for (const auto &h : in.header)
            if (h.rfind("trunc_gap_", 0) == 0) cols.emplace_back(h, parse_double(h.substr(10)));
        for (auto &[k, rows] : group({"N", "scheme"}))
            for (auto &[col, f] : cols) {
                auto g = column(rows, col);
                if (g.empty()) continue;
                auto key = k;
                key.push_back(format_double(f));
                emit(key, {mean(g), static_cast<double>(g.size())});
            }
    } else if (figure == "fig5") {
        out.header = {"N", "scheme", "mean_p_mis", "median_tts_q", "mean_avg_gap", "count"};
        for (auto &[k, rows] : group({"N", "scheme"})) {
            auto p = column(rows, "p_mis");
            if (p.empty()) continue;
            emit(k, {mean(p), median(column(rows, "tts_q")), mean(column(rows, "avg_gap")),
                     static_cast<double>(p.size())});
        }
    } else {
        std::string names;
        for (const auto &f : report_figures()) names += (names.empty() ? "" : ", ") + f;
        throw std::invalid_argument("unknown figure '" + figure + "' (expected one of " + names + ")");
    }
    return out;
}

}  // namespace udmis
