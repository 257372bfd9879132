#include "tiq/report.hpp"

#include <cmath>
#include <cstdlib>

namespace tiq {

nlohmann::json ledger_json(const QueryLedger& ledger) {
    nlohmann::json j;
    j["total"] = ledger.total;
    for (std::size_t i = 0; i < ledger.per_phase.size(); ++i) {
        j[phase_label(static_cast<Phase>(i))] = ledger.per_phase[i];
    }
    return j;
}

nlohmann::json graph_json(const Graph& g, const TriangleStats& stats) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = g.m();
    j["t_brute"] = stats.t;
    j["delta_e"] = stats.delta_e;
    return j;
}

nlohmann::json config_json(const EstimatorConfig& cfg) {
    nlohmann::json j;
    j["eps"] = cfg.eps;
    j["d"] = cfg.d;
    j["preset"] = preset_label(cfg.preset);
    j["seed"] = cfg.seed;
    j["kappa1"] = cfg.kappa1;
    j["kappa2"] = cfg.kappa2;
    j["kappa3"] = cfg.kappa3;
    j["compact_trigger"] = cfg.compact_trigger;
    j["sampler_c_s"] = cfg.sampler_c_s;
    j["budget_c"] = cfg.budget_c;
    if (cfg.gamma_override) j["gamma_override"] = *cfg.gamma_override;
    if (cfg.n_cap_override) j["n_cap_override"] = *cfg.n_cap_override;
    if (cfg.tau_cap_override) j["tau_cap_override"] = *cfg.tau_cap_override;
    if (cfg.max_iterations_override) {
        j["max_iterations_override"] = *cfg.max_iterations_override;
    }
    return j;
}

nlohmann::json derived_json(const DerivedParams& dp) {
    nlohmann::json j;
    j["levels"] = dp.levels;
    j["tau"] = dp.tau;
    j["tuple_target"] = dp.tuple_target;
    j["gamma"] = dp.gamma;
    j["lambda"] = dp.lambda;
    j["rho"] = dp.rho;
    j["delta"] = dp.delta;
    j["max_iterations"] = dp.max_iterations;
    j["exhaustive_regime"] = dp.exhaustive_regime;
    return j;
}

nlohmann::json run_report_json(const Graph& g, const TriangleStats& stats,
                               const EstimatorConfig& cfg,
                               const EstimateReport& report,
                               std::optional<double> wall_time_s) {
    nlohmann::json j;
    j["schema"] = "tiq-run-report/1";
    j["graph"] = graph_json(g, stats);
    j["config"] = config_json(cfg);
    j["derived"] = derived_json(report.params);
    nlohmann::json est;
    est["t_hat"] = report.t_hat;
    est["mode"] = mode_label(report.mode);
    est["iterations"] = report.iterations;
    est["failed"] = report.failed;
    est["failure_reason"] = report.failure_reason;
    const double denom = std::max<double>(static_cast<double>(stats.t), 1.0);
    est["relative_error"] =
        std::fabs(report.t_hat - static_cast<double>(stats.t)) / denom;
    est["budget_bound"] = report.budget_bound;
    est["within_budget"] = report.within_budget;
    j["estimate"] = est;
    j["queries"] = ledger_json(report.ledger);
    j["seed"] = cfg.seed;
    if (wall_time_s) j["wall_time_s"] = *wall_time_s;
    return j;
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace tiq
