// Command-line front end for the udmis library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "udmis/udmis.hpp"

namespace {

using namespace udmis;
using io::Json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;
constexpr const char *kCacheEnv = "UDMIS_CACHE_DIR";

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text(path, text);
}

Instance load_instance(const std::string &path) {
    if (path.size() > 4 && (path.ends_with(".col") || path.ends_with(".dimacs"))) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        Instance inst;
        inst.graph = io::from_dimacs(in);
        inst.meta.name = path;
        inst.meta.generator = "dimacs";
        return inst;
    }
    return io::read_instance(path);
}

// "p=0.03,q=0.08"
NoiseModel parse_noise(const std::string &spec) {
    NoiseModel nm;
    std::stringstream ss(spec);
    std::string item;
    bool seen_p = false, seen_q = false;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("noise entries look like p=0.03,q=0.08");
        const std::string key = item.substr(0, eq);
        const double v = io::parse_double(item.substr(eq + 1));
        if (key == "p") {
            nm.p = v;
            seen_p = true;
        } else if (key == "q") {
            nm.q = v;
            seen_q = true;
        } else {
            throw std::invalid_argument("unknown noise parameter '" + key + "'");
        }
    }
    if (!seen_p || !seen_q) throw std::invalid_argument("noise needs both p and q");
    validate_noise(nm);
    return nm;
}

struct GenerateArgs {
    std::string kind = "native", out, dimacs, layout = "triangular";
    std::size_t n = 50, traps = kDefaultTrapCount, height = 0;
    double rho = 0.8, spacing = kDefaultSpacingUm, rewire = 0.0;
    std::uint64_t seed = 0;
};

int run_generate(const GenerateArgs &a) {
    Instance inst;
    if (a.kind == "native") {
        inst = sample_native_instance(make_layout(parse_layout_kind(a.layout), a.traps, a.spacing), a.n, a.rho, a.seed);
    } else if (a.kind == "box") {
        inst = random_udg_box(a.n, a.rho, a.seed);
    } else if (a.kind == "kings") {
        inst = kings_lattice(a.n, a.height ? a.height : a.n);
        inst.meta.seed = a.seed;
    } else {
        throw std::invalid_argument("unknown generator kind '" + a.kind + "'");
    }
    if (a.rewire > 0.0) {
        inst.graph = rewire(inst.graph, a.rewire, a.seed);
        inst.positions.reset();
        inst.meta.generator += "+rewire";
        inst.meta.name += "_f" + format_param(a.rewire);
    }
    emit(a.out, io::dump(io::to_json(inst)));
    if (!a.dimacs.empty()) io::write_text(a.dimacs, io::to_dimacs(inst.graph));
    return 0;
}

struct SolveArgs {
    std::string in, out, alpha = "auto", method = "bb";
    std::optional<std::uint64_t> budget;
    bool no_lp = false;
};

int run_solve(const SolveArgs &a) {
    Instance inst = load_instance(a.in);
    const Graph &g = inst.graph;
    double alpha = default_penalty(g);
    if (a.alpha != "auto") {
        alpha = io::parse_double(a.alpha);
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    }
    SolveReport r;
    if (a.method == "bb") {
        SolveOptions opts;
        opts.budget_ticks = a.budget;
        opts.compute_lp = !a.no_lp;
        r = solve_bb(g, opts);
    } else if (a.method == "dp") {
        auto td = minfill_treewidth(g);
        r.optimum = solve_treewidth_dp(g, td);
        r.solution = max_weight_independent_set(g);
        if (!a.no_lp) {
            r.lp_root = lp_root_relaxation(g);
            r.root_gap_pct = root_gap_percent(r.lp_root, r.optimum);
        }
    } else if (a.method == "brute") {
        auto b = brute_force(g);
        r.optimum = b.optimum;
        r.solution = b.witness;
        if (!a.no_lp) {
            r.lp_root = lp_root_relaxation(g);
            r.root_gap_pct = root_gap_percent(r.lp_root, r.optimum);
        }
    } else {
        throw std::invalid_argument("unknown method '" + a.method + "' (bb, dp or brute)");
    }
    Json j = io::to_json(r);
    j["alpha"] = alpha;
    j["qubo_cost"] = qubo_cost(g, indicator(g.n(), r.solution), alpha);
    emit(a.out, io::dump(j));
    return r.optimal ? 0 : kExitTruncated;
}

struct AnnealArgs {
    std::string in, schedule, noise, out;
    std::uint64_t shots = 1000, seed = 0;
    double dt = kDefaultDtUs, duration_factor = 1.0;
    bool mitigate = false, repair = false;
};

int run_anneal(const AnnealArgs &a) {
    Instance inst = load_instance(a.in);
    Schedule sched = a.schedule.empty() ? default_schedule() : io::schedule_from_json(io::read_json(a.schedule));
    auto h = build_hamiltonian(inst, sched.scaled(a.duration_factor));
    auto ev = evolve(h, a.dt);
    std::vector<double> dist = probabilities(ev.state);
    std::optional<NoiseModel> nm;
    if (!a.noise.empty()) {
        nm = parse_noise(a.noise);
        dist = apply_readout_noise(dist, *nm);
    }
    if (a.mitigate && !nm) throw std::invalid_argument("--mitigate needs --noise");
    SampleSet raw = sample_distribution(dist, inst.n(), a.shots, a.seed);
    Json j = io::to_json(a.repair ? repair_bitstrings(raw, inst.graph) : raw);
    if (a.mitigate) {
        auto mit = mitigate_readout(empirical_distribution(raw, inst.n()), *nm);
        Distribution clipped = to_distribution(mit.clipped, inst.n());
        if (a.repair) clipped = repair_bitstrings(clipped, inst.graph);
        j["mitigated"] = {{"quasi", io::to_json(to_distribution(mit.quasi, inst.n()))},
                          {"clipped", io::to_json(clipped)}};
    }
    j["max_norm_drift"] = ev.max_norm_drift;
    emit(a.out, io::dump(j));
    return 0;
}

struct MitigateArgs {
    std::string in, noise, graph, out;
    bool repair = false;
};

int run_mitigate(const MitigateArgs &a) {
    SampleSet s = io::sampleset_from_json(io::read_json(a.in));
    if (s.counts.empty()) throw std::invalid_argument("sample set is empty");
    const std::size_t n = s.counts.begin()->first.size();
    auto mit = mitigate_readout(empirical_distribution(s, n), parse_noise(a.noise));
    Distribution quasi = to_distribution(mit.quasi, n), clipped = to_distribution(mit.clipped, n);
    if (a.repair) {
        if (a.graph.empty()) throw std::invalid_argument("--repair needs --graph");
        clipped = repair_bitstrings(clipped, load_instance(a.graph).graph);
    }
    Json j;
    j["quasi"] = io::to_json(quasi);
    j["clipped"] = io::to_json(clipped);
    emit(a.out, io::dump(j));
    return 0;
}

struct BenchArgs {
    std::string config, out, cache_dir;
    std::size_t workers = 1;
};

int run_bench(const BenchArgs &a) {
    BenchConfig cfg = bench_config_from_json(io::read_json(a.config));
    BenchRunOptions opt;
    opt.workers = a.workers;
    if (!a.cache_dir.empty())
        opt.cache_dir = a.cache_dir;
    else if (const char *env = std::getenv(kCacheEnv); env && *env)
        opt.cache_dir = env;
    std::ofstream file;
    std::ostream *os = &std::cout;
    if (!a.out.empty() && a.out != "-") {
        file.open(a.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + a.out + "' for writing");
        os = &file;
    }
    *os << io::join_csv(csv_header(cfg)) << '\n' << std::flush;
    opt.on_row = [&](const MetricRow &r) { *os << io::join_csv(csv_fields(cfg, r)) << '\n' << std::flush; };
    run_benchmark(cfg, opt);
    return 0;
}

int run_report(const std::string &in, const std::string &figure, const std::string &out) {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + in + "'");
    io::CsvTable t = make_report(io::read_csv(f), figure);
    std::string text = io::join_csv(t.header) + "\n";
    for (const auto &row : t.rows) text += io::join_csv(row) + "\n";
    emit(out, text);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unit-disk MIS instance generation, analysis, exact solving and annealing emulation"};
    app.require_subcommand(1);
    int status = 0;

    GenerateArgs gen;
    auto *g = app.add_subcommand("generate", "Generate an instance");
    g->add_option("--kind", gen.kind, "native, box or kings")->check(CLI::IsMember({"native", "box", "kings"}));
    g->add_option("--n", gen.n, "Atoms (native, box) or lattice width (kings)")->required();
    g->add_option("--rho", gen.rho, "Fill density");
    g->add_option("--seed", gen.seed);
    g->add_option("--traps", gen.traps, "Trap count of the native layout");
    g->add_option("--layout", gen.layout, "triangular or kings");
    g->add_option("--spacing", gen.spacing, "Trap spacing in um");
    g->add_option("--height", gen.height, "Lattice height (kings; default = width)");
    g->add_option("--rewire", gen.rewire, "Fraction of edges to rewire");
    g->add_option("--dimacs", gen.dimacs, "Also write a DIMACS edge file");
    g->add_option("--out", gen.out);
    g->callback([&] { status = run_generate(gen); });

    std::string an_in, an_out;
    std::size_t orientations = kDefaultOrientations;
    auto *an = app.add_subcommand("analyze", "Hardness parameters of an instance");
    an->add_option("--in", an_in)->required();
    an->add_option("--orientations", orientations);
    an->add_option("--out", an_out);
    an->callback([&] { emit(an_out, io::dump(io::to_json(analyze(load_instance(an_in), orientations)))); });

    std::string w_in, w_out, w_scheme = "unweighted";
    double delta_bar = 1000.0;
    std::uint64_t w_seed = 0;
    auto *w = app.add_subcommand("weight", "Assign vertex weights");
    w->add_option("--in", w_in)->required();
    w->add_option("--scheme", w_scheme)->required();
    w->add_option("--delta-bar", delta_bar);
    w->add_option("--seed", w_seed);
    w->add_option("--out", w_out);
    w->callback([&] {
        Instance inst = load_instance(w_in);
        inst.graph = apply_scheme(inst.graph, {parse_weight_kind(w_scheme), delta_bar, w_seed});
        emit(w_out, io::dump(io::to_json(inst)));
    });

    SolveArgs sv;
    auto *s = app.add_subcommand("solve", "Exact MWIS; exit code 3 when the tick budget ran out");
    s->add_option("--in", sv.in)->required();
    s->add_option("--alpha", sv.alpha, "QUBO penalty or 'auto' (2 max w)");
    s->add_option("--budget-ticks", sv.budget);
    s->add_option("--method", sv.method, "bb, dp or brute");
    s->add_flag("--no-lp", sv.no_lp, "Skip the LP root relaxation");
    s->add_option("--out", sv.out);
    s->callback([&] { status = run_solve(sv); });

    std::string ap_in, ap_out;
    auto *ap = app.add_subcommand("approx", "Greedy leftmost-disk independent set");
    ap->add_option("--in", ap_in)->required();
    ap->add_option("--out", ap_out);
    ap->callback([&] {
        Instance inst = load_instance(ap_in);
        auto set = greedy_leftmost(inst);
        Json j;
        j["solution"] = set;
        j["weight"] = set_weight(inst.graph, set);
        emit(ap_out, io::dump(j));
    });

    AnnealArgs ann;
    auto *a = app.add_subcommand("anneal", "Emulate annealing and sample bitstrings");
    a->add_option("--in", ann.in)->required();
    a->add_option("--schedule", ann.schedule, "Schedule JSON (default schedule when omitted)");
    a->add_option("--shots", ann.shots);
    a->add_option("--seed", ann.seed);
    a->add_option("--noise", ann.noise, "Readout error rates, e.g. p=0.03,q=0.08");
    a->add_option("--dt", ann.dt, "Time step in us");
    a->add_option("--duration-factor", ann.duration_factor, "Stretch the schedule");
    a->add_flag("--mitigate", ann.mitigate);
    a->add_flag("--repair", ann.repair);
    a->add_option("--out", ann.out);
    a->callback([&] { status = run_anneal(ann); });

    MitigateArgs mit;
    auto *m = app.add_subcommand("mitigate", "Invert the readout channel on a sample set");
    m->add_option("--in", mit.in)->required();
    m->add_option("--noise", mit.noise)->required();
    m->add_option("--graph", mit.graph, "Instance used by --repair");
    m->add_flag("--repair", mit.repair);
    m->add_option("--out", mit.out);
    m->callback([&] { status = run_mitigate(mit); });

    BenchArgs b;
    auto *bn = app.add_subcommand("bench", "Run a sweep and write a CSV table");
    bn->add_option("--config", b.config)->required();
    bn->add_option("--out", b.out);
    bn->add_option("--workers", b.workers);
    bn->add_option("--cache-dir", b.cache_dir, std::string("Instance cache (default $") + kCacheEnv + ")");
    bn->callback([&] { status = run_bench(b); });

    std::string r_in, r_fig, r_out;
    auto *r = app.add_subcommand("report", "Aggregate a results table for plotting");
    r->add_option("--in", r_in)->required();
    r->add_option("--figure", r_fig)->required()->check(CLI::IsMember(report_figures()));
    r->add_option("--out", r_out);
    r->callback([&] { status = run_report(r_in, r_fig, r_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return status;
}
