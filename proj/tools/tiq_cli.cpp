// Command-line front end: graph generation, brute-force baselines,
// estimation runs, seed sweeps, and query-budget benchmarks. Every
// subcommand emits one JSON document on stdout (or --out FILE); field names
// are frozen in docs/report-schema.md.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiq/graph.hpp"
#include "tiq/mathutil.hpp"
#include "tiq/oracle.hpp"
#include "tiq/pipeline.hpp"
#include "tiq/report.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RNG_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env) return static_cast<std::uint64_t>(v);
    }
    return 0;
}

void emit(const json& doc, const std::string& out_path) {
    const std::string text = tiq::dump_report(doc);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

struct FamilyFlags {
    std::string family = "book";
    std::uint32_t n = 64;
    double p = 0.1;
    std::uint32_t d = 1;
    std::uint32_t gadgets = 0;
    std::uint64_t target_t = 0;
    std::uint32_t clique_size = 4;
    std::uint32_t cliques = 0;
    std::uint32_t rows = 8;
    std::uint32_t cols = 8;
    double tol = 1e-9;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f, bool with_d = true) {
    cmd->add_option("--family", f.family,
                    "graph family: er | book | unit | cliques | packing")
        ->check(CLI::IsMember({"er", "book", "unit", "cliques", "packing"}));
    cmd->add_option("--n", f.n, "vertex count (ignored for unit)");
    cmd->add_option("--p", f.p, "edge probability (er)");
    if (with_d) {
        cmd->add_option("--d", f.d, "per-edge triangle bound (book, packing)");
    }
    cmd->add_option("--gadgets", f.gadgets,
                    "book gadget count; 0 picks the maximum that fits");
    cmd->add_option("--target-t", f.target_t,
                    "triangle target (packing); 0 picks n");
    cmd->add_option("--clique-size", f.clique_size, "clique size (cliques)");
    cmd->add_option("--cliques", f.cliques,
                    "clique count; 0 picks the maximum that fits");
    cmd->add_option("--rows", f.rows, "lattice rows (unit)");
    cmd->add_option("--cols", f.cols, "lattice cols (unit)");
    cmd->add_option("--tol", f.tol, "unit-distance tolerance");
}

tiq::Graph build_graph(const FamilyFlags& f, std::uint32_t n,
                       std::uint64_t seed, std::string& family_out) {
    tiq::GeneratorSpec spec;
    family_out = f.family;
    spec.n = n;
    spec.d = f.d;
    spec.tol = f.tol;
    if (f.family == "er") {
        spec.family = tiq::Family::ErdosRenyi;
        spec.p = f.p;
    } else if (f.family == "book") {
        spec.family = tiq::Family::PlantedBook;
        spec.gadgets = f.gadgets > 0 ? f.gadgets : n / (f.d + 2);
    } else if (f.family == "unit") {
        spec.family = tiq::Family::UnitDistance;
        spec.points = tiq::triangular_lattice_points(f.rows, f.cols);
    } else if (f.family == "cliques") {
        spec.family = tiq::Family::CliqueUnion;
        spec.clique_size = f.clique_size;
        spec.cliques =
            f.cliques > 0 ? f.cliques : n / std::max(f.clique_size, 1u);
    } else if (f.family == "packing") {
        spec.family = tiq::Family::TrianglePacking;
        spec.target_t = f.target_t > 0 ? f.target_t : n;
    } else {
        throw std::runtime_error("unknown family: " + f.family);
    }
    return tiq::generate(spec, seed);
}

tiq::Preset parse_preset(const std::string& s) {
    if (s == "practical") return tiq::Preset::Practical;
    if (s == "theoretical") return tiq::Preset::Theoretical;
    throw std::runtime_error("unknown preset: " + s);
}

struct EstimateFlags {
    double eps = 0.2;
    std::uint32_t d = 1;
    std::string preset = "practical";
    std::uint64_t seed = default_seed();
    std::optional<std::uint64_t> gamma;
    std::optional<std::uint64_t> n_cap;
    std::optional<std::uint64_t> tau_cap;
    std::optional<std::uint32_t> max_iterations;
    std::uint32_t compact_trigger = 10;
};

void add_estimate_flags(CLI::App* cmd, EstimateFlags& e) {
    cmd->add_option("--eps", e.eps, "target relative error");
    cmd->add_option("--d", e.d, "asserted per-edge triangle bound");
    cmd->add_option("--preset", e.preset, "practical | theoretical")
        ->check(CLI::IsMember({"practical", "theoretical"}));
    cmd->add_option("--seed", e.seed, "rng seed (default: RNG_SEED env or 0)");
    cmd->add_option("--gamma", e.gamma, "coarse verification repetitions");
    cmd->add_option("--n-cap", e.n_cap, "cap on the tuple target");
    cmd->add_option("--tau-cap", e.tau_cap, "cap on the decision threshold");
    cmd->add_option("--max-iterations", e.max_iterations,
                    "cap on split/resolve iterations");
    cmd->add_option("--compact-trigger", e.compact_trigger,
                    "compact when the tuple list exceeds this multiple of "
                    "the tuple target");
}

tiq::EstimatorConfig make_config(const EstimateFlags& e) {
    tiq::EstimatorConfig cfg =
        parse_preset(e.preset) == tiq::Preset::Practical
            ? tiq::EstimatorConfig::practical(e.eps, e.d, e.seed)
            : tiq::EstimatorConfig::theoretical(e.eps, e.d, e.seed);
    cfg.gamma_override = e.gamma;
    cfg.n_cap_override = e.n_cap;
    cfg.tau_cap_override = e.tau_cap;
    cfg.max_iterations_override = e.max_iterations;
    cfg.compact_trigger = e.compact_trigger;
    return cfg;
}

int run_generate(const FamilyFlags& f, std::uint64_t seed,
                 const std::string& edge_out, const std::string& report_out) {
    std::string family;
    const tiq::Graph g = build_graph(f, f.n, seed, family);
    tiq::save_edge_list_file(g, edge_out);
    const tiq::TriangleStats stats = tiq::count_triangles_brute(g);
    json doc;
    doc["schema"] = "tiq-generate/1";
    doc["family"] = family;
    doc["graph"] = tiq::graph_json(g, stats);
    doc["seed"] = seed;
    doc["path"] = edge_out;
    emit(doc, report_out);
    return 0;
}

int run_brute(const std::string& file, const std::string& report_out) {
    const tiq::Graph g = tiq::load_edge_list_file(file);
    const tiq::TriangleStats stats = tiq::count_triangles_brute(g);
    json doc;
    doc["schema"] = "tiq-brute/1";
    doc["graph"] = tiq::graph_json(g, stats);
    emit(doc, report_out);
    return 0;
}

int run_estimate(const std::string& file, const EstimateFlags& e,
                 bool timings, const std::string& report_out) {
    const tiq::Graph g = tiq::load_edge_list_file(file);
    const tiq::TriangleStats stats = tiq::count_triangles_brute(g);
    tiq::TisOracle oracle(g);
    const tiq::EstimatorConfig cfg = make_config(e);
    const auto started = std::chrono::steady_clock::now();
    const tiq::EstimateReport report = tiq::estimate_triangles(oracle, cfg);
    std::optional<double> wall;
    if (timings) {
        wall = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             started)
                   .count();
    }
    emit(tiq::run_report_json(g, stats, cfg, report, wall), report_out);
    return report.failed ? 2 : 0;
}

int run_sweep(const std::string& file, const EstimateFlags& e,
              std::uint32_t runs, const std::string& report_out) {
    if (runs == 0) throw std::runtime_error("sweep: runs must be positive");
    const tiq::Graph g = tiq::load_edge_list_file(file);
    const tiq::TriangleStats stats = tiq::count_triangles_brute(g);
    const double truth = static_cast<double>(stats.t);
    const double denom = std::max(truth, 1.0);
    std::uint32_t successes = 0;
    std::uint32_t failures = 0;
    double err_sum = 0.0;
    tiq::EstimatorConfig cfg = make_config(e);
    for (std::uint32_t r = 0; r < runs; ++r) {
        cfg.seed = e.seed + r;
        tiq::TisOracle oracle(g);
        const tiq::EstimateReport report = tiq::estimate_triangles(oracle, cfg);
        if (report.failed) {
            ++failures;
            continue;
        }
        const double rel = std::fabs(report.t_hat - truth) / denom;
        err_sum += rel;
        if (rel <= e.eps) ++successes;
    }
    json doc;
    doc["schema"] = "tiq-sweep/1";
    doc["graph"] = tiq::graph_json(g, stats);
    doc["config"] = tiq::config_json(cfg);
    doc["runs"] = runs;
    doc["base_seed"] = e.seed;
    doc["failures"] = failures;
    doc["success_fraction"] =
        static_cast<double>(successes) / static_cast<double>(runs);
    doc["mean_relative_error"] =
        failures < runs ? err_sum / static_cast<double>(runs - failures) : 0.0;
    doc["tolerance"] = e.eps;
    emit(doc, report_out);
    return failures > 0 ? 2 : 0;
}

int run_bench(const FamilyFlags& f, const EstimateFlags& e,
              std::vector<std::uint32_t> ns, const std::string& report_out) {
    if (ns.empty()) ns = {64, 128, 256, 512};
    FamilyFlags flags = f;
    flags.d = e.d;  // the generated instance honors the asserted bound
    json rows = json::array();
    bool any_failed = false;
    for (const std::uint32_t n : ns) {
        std::string family;
        const tiq::Graph g = build_graph(flags, n, e.seed, family);
        const tiq::TriangleStats stats = tiq::count_triangles_brute(g);
        tiq::TisOracle oracle(g);
        const tiq::EstimatorConfig cfg = make_config(e);
        const tiq::EstimateReport report = tiq::estimate_triangles(oracle, cfg);
        any_failed = any_failed || report.failed;
        const double levels =
            std::max<double>(tiq::ceil_log2(n), 1.0);
        const double curve = static_cast<double>(e.d) *
                             static_cast<double>(e.d) *
                             std::pow(levels, 18.0) / std::pow(e.eps, 4.0);
        json row;
        row["n"] = n;
        row["levels"] = static_cast<std::uint32_t>(levels);
        row["edges"] = g.m();
        row["t_brute"] = stats.t;
        row["mode"] = tiq::mode_label(report.mode);
        row["failed"] = report.failed;
        row["queries_total"] = report.ledger.total;
        row["curve"] = curve;
        row["queries_over_curve"] =
            static_cast<double>(report.ledger.total) / curve;
        rows.push_back(row);
    }
    json doc;
    doc["schema"] = "tiq-bench/1";
    doc["family"] = f.family;
    doc["eps"] = e.eps;
    doc["d"] = e.d;
    doc["preset"] = e.preset;
    doc["seed"] = e.seed;
    doc["rows"] = rows;
    emit(doc, report_out);
    return any_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle-count estimation against a set-intersection "
                 "triangle oracle"};
    app.require_subcommand(1);

    std::string report_out;
    app.add_option("--out", report_out, "write the JSON document here")
        ->capture_default_str();

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated edge list");
    gen->fallthrough();
    FamilyFlags gen_f;
    add_family_flags(gen, gen_f);
    std::uint64_t gen_seed = default_seed();
    gen->add_option("--seed", gen_seed, "rng seed");
    std::string gen_edge_out;
    gen->add_option("--edge-out", gen_edge_out, "edge-list output path")
        ->required();

    // brute
    auto* brute = app.add_subcommand("brute", "brute-force triangle stats");
    brute->fallthrough();
    std::string brute_file;
    brute->add_option("file", brute_file, "edge-list file")->required();

    // estimate
    auto* est = app.add_subcommand("estimate", "run the estimator once");
    est->fallthrough();
    std::string est_file;
    est->add_option("file", est_file, "edge-list file")->required();
    EstimateFlags est_e;
    add_estimate_flags(est, est_e);
    bool est_timings = false;
    est->add_flag("--timings", est_timings,
                  "include wall_time_s (breaks byte-for-byte reproducibility)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "repeat the estimator over seeds");
    sweep->fallthrough();
    std::string sweep_file;
    sweep->add_option("file", sweep_file, "edge-list file")->required();
    EstimateFlags sweep_e;
    add_estimate_flags(sweep, sweep_e);
    std::uint32_t sweep_runs = 100;
    sweep->add_option("-R,--runs", sweep_runs, "number of seeded runs");

    // bench
    auto* bench = app.add_subcommand("bench", "query counts across sizes");
    bench->fallthrough();
    FamilyFlags bench_f;
    add_family_flags(bench, bench_f, /*with_d=*/false);
    EstimateFlags bench_e;
    add_estimate_flags(bench, bench_e);
    std::vector<std::uint32_t> bench_ns;
    bench->add_option("--sizes", bench_ns, "vertex counts to sweep")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            return run_generate(gen_f, gen_seed, gen_edge_out, report_out);
        }
        if (brute->parsed()) return run_brute(brute_file, report_out);
        if (est->parsed()) {
            return run_estimate(est_file, est_e, est_timings, report_out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_file, sweep_e, sweep_runs, report_out);
        }
        if (bench->parsed()) {
            return run_bench(bench_f, bench_e, bench_ns, report_out);
        }
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
