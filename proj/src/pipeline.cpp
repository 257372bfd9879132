#include "tiq/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tiq/coarse.hpp"
#include "tiq/exact_count.hpp"
#include "tiq/mathutil.hpp"
#include "tiq/sparsify.hpp"

namespace tiq {

const char* preset_label(Preset p) {
    return p == Preset::Theoretical ? "theoretical" : "practical";
}

const char* mode_label(EstimateMode m) {
    switch (m) {
        case EstimateMode::Exhaustive: return "exhaustive";
        case EstimateMode::Threshold: return "threshold";
        case EstimateMode::FullPipeline: return "full-pipeline";
    }
    return "full-pipeline";
}

EstimatorConfig EstimatorConfig::theoretical(double eps, std::uint32_t d,
                                             std::uint64_t seed) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.d = d;
    cfg.preset = Preset::Theoretical;
    cfg.seed = seed;
    cfg.kappa1 = 271.0;
    cfg.kappa2 = 271.0;
    cfg.kappa3 = 1.0;
    return cfg;
}

EstimatorConfig EstimatorConfig::practical(double eps, std::uint32_t d,
                                           std::uint64_t seed) {
    EstimatorConfig cfg;
    cfg.eps = eps;
    cfg.d = d;
    cfg.preset = Preset::Practical;
    cfg.seed = seed;
    cfg.kappa1 = 2.0;
    cfg.kappa2 = 2.0;
    cfg.kappa3 = 1.0;
    return cfg;
}

namespace {

constexpr std::uint64_t kPracticalTupleCap = 64;
constexpr std::uint64_t kPracticalTauCap = 300;

void validate_config(const EstimatorConfig& cfg) {
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) {
        throw std::invalid_argument("estimator: eps must be in (0,1)");
    }
    if (cfg.d < 1) {
        throw std::invalid_argument("estimator: d must be at least 1");
    }
    if (!(cfg.kappa1 > 0.0 && cfg.kappa2 > 0.0 && cfg.kappa3 > 0.0)) {
        throw std::invalid_argument("estimator: kappa constants must be positive");
    }
    if (cfg.compact_trigger < 1) {
        throw std::invalid_argument("estimator: compact_trigger must be at least 1");
    }
    if (!(cfg.sampler_c_s > 0.0)) {
        throw std::invalid_argument("estimator: sampler_c_s must be positive");
    }
    if (!(cfg.budget_c > 0.0)) {
        throw std::invalid_argument("estimator: budget_c must be positive");
    }
    if (cfg.gamma_override && *cfg.gamma_override == 0) {
        throw std::invalid_argument("estimator: gamma override must be positive");
    }
}

QueryLedger ledger_delta(const QueryLedger& after, const QueryLedger& before) {
    QueryLedger d;
    d.total = after.total - before.total;
    for (std::size_t i = 0; i < d.per_phase.size(); ++i) {
        d.per_phase[i] = after.per_phase[i] - before.per_phase[i];
    }
    return d;
}

void finalize(EstimateReport& report, const TisOracle& oracle,
              const QueryLedger& before, const EstimatorConfig& cfg) {
    report.ledger = ledger_delta(oracle.ledger(), before);
    const double levels = static_cast<double>(report.params.levels);
    report.budget_bound = cfg.budget_c * static_cast<double>(cfg.d) *
                          static_cast<double>(cfg.d) * std::pow(levels, 18.0) /
                          std::pow(cfg.eps, 4.0);
    report.within_budget =
        static_cast<double>(report.ledger.total) <= report.budget_bound;
}

}  // namespace

DerivedParams derive_params(const EstimatorConfig& cfg, std::uint32_t n) {
    validate_config(cfg);
    DerivedParams dp;
    dp.n = n;
    dp.levels = std::max<std::uint32_t>(ceil_log2(n), 1);
    const double levels = static_cast<double>(dp.levels);
    const double l4 = levels * levels * levels * levels;
    const double eps2 = cfg.eps * cfg.eps;
    const double lead = std::max(36.0 * cfg.kappa1 * cfg.kappa1,
                                 324.0 * cfg.kappa2 * cfg.kappa2);
    std::uint64_t tau = ceil_u64(lead * static_cast<double>(cfg.d) *
                                 static_cast<double>(cfg.d) * l4 / eps2);
    if (cfg.preset == Preset::Practical || cfg.tau_cap_override) {
        tau = std::min(tau, cfg.tau_cap_override.value_or(kPracticalTauCap));
    }
    dp.tau = std::max<std::uint64_t>(tau, 1);

    std::uint64_t target = ceil_u64(cfg.kappa3 * std::pow(levels, 12.0) / eps2);
    if (cfg.preset == Preset::Practical || cfg.n_cap_override) {
        target = std::min(target, cfg.n_cap_override.value_or(kPracticalTupleCap));
    }
    dp.tuple_target = std::max<std::uint64_t>(target, 1);

    dp.gamma = cfg.gamma_override.value_or(
        cfg.preset == Preset::Theoretical ? 2000ull * dp.levels : 200ull);
    dp.lambda = cfg.eps / (6.0 * levels);
    dp.rho = 64.0 * levels * levels;
    dp.delta = std::min(std::pow(std::max<double>(n, 2.0), -10.0), 0.5);
    dp.max_iterations =
        cfg.max_iterations_override.value_or(3 * dp.levels + 2);
    dp.exhaustive_regime =
        cfg.preset == Preset::Theoretical &&
        cfg.eps <= std::sqrt(static_cast<double>(cfg.d)) *
                       std::pow(levels, 4.5) /
                       std::pow(static_cast<double>(n), 0.75);
    return dp;
}

std::uint64_t exhaustive_singleton_count(TisOracle& oracle) {
    const std::uint32_t n = oracle.n();
    std::uint64_t yes = 0;
    VertexSet a(1), b(1), c(1);
    for (Vertex x = 0; x + 2 < n; ++x) {
        for (Vertex y = x + 1; y + 1 < n; ++y) {
            for (Vertex z = y + 1; z < n; ++z) {
                a[0] = x;
                b[0] = y;
                c[0] = z;
                if (oracle.query(a, b, c, Phase::PipelineMisc)) ++yes;
            }
        }
    }
    return yes;
}

EstimateReport estimate_triangles(TisOracle& oracle,
                                  const EstimatorConfig& cfg,
                                  const PipelineHook& hook) {
    const std::uint32_t n = oracle.n();
    EstimateReport report;
    report.params = derive_params(cfg, n);
    const DerivedParams& dp = report.params;
    const QueryLedger before = oracle.ledger();
    Rng root(cfg.seed);

    if (n < 3) {
        report.mode = EstimateMode::Exhaustive;
        report.t_hat = 0.0;
        finalize(report, oracle, before, cfg);
        return report;
    }

    if (dp.exhaustive_regime) {
        report.t_hat = static_cast<double>(exhaustive_singleton_count(oracle));
        report.mode = EstimateMode::Exhaustive;
        finalize(report, oracle, before, cfg);
        return report;
    }

    {
        Rng head_rng = root.split();
        const ThresholdOutcome head =
            threshold_approx_estimate(oracle, dp.tau, cfg.eps, head_rng);
        if (!head.exceeds_threshold()) {
            report.t_hat = head.value();
            report.mode = EstimateMode::Threshold;
            finalize(report, oracle, before, cfg);
            return report;
        }
    }

    // Seed the loop with one random 3-coloring of the whole vertex set.
    double psi = 0.0;
    std::vector<WeightedTuple> tuples;
    {
        VertexSet all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        Rng seed_rng = root.split();
        SparsifyResult base = general_sparsify(all, 1, seed_rng);
        for (auto& parts : base.tuples) {
            if (parts[0].empty() || parts[1].empty() || parts[2].empty()) {
                continue;  // an empty side carries no triangles
            }
            WeightedTuple t;
            t.a = std::move(parts[0]);
            t.b = std::move(parts[1]);
            t.c = std::move(parts[2]);
            t.w = base.scale;
            tuples.push_back(std::move(t));
        }
    }

    std::uint32_t iteration = 0;
    while (!tuples.empty() && iteration < dp.max_iterations && !report.failed) {
        ++iteration;

        // Resolve: tuples at or below the threshold are counted exactly and
        // leave the list; the rest survive.
        std::vector<WeightedTuple> survivors;
        for (auto& t : tuples) {
            const ThresholdOutcome out =
                decide_threshold_tripartite(oracle, t.a, t.b, t.c, dp.tau);
            if (out.exceeds_threshold()) {
                survivors.push_back(std::move(t));
            } else {
                psi += t.w * out.value();
            }
        }
        tuples = std::move(survivors);
        if (hook) hook({PipelineEvent::AfterResolve, iteration, tuples, psi});
        if (tuples.empty()) break;

        const std::uint64_t r = tuples.size();
        if (r > static_cast<std::uint64_t>(cfg.compact_trigger) * dp.tuple_target) {
            // Compact: coarse-estimate every tuple, then importance-sample
            // the list down to the tuple target.
            const CoarseParams cp{dp.gamma};
            for (auto& t : tuples) {
                Rng coarse_rng = root.split();
                auto est = coarse_estimate(oracle, t.a, t.b, t.c, cp, coarse_rng);
                if (!est) {
                    Rng retry_rng = root.split();
                    est = coarse_estimate(oracle, t.a, t.b, t.c, cp, retry_rng);
                }
                if (!est) {
                    report.failed = true;
                    report.failure_reason =
                        "coarse estimation rejected the whole guess grid twice";
                    break;
                }
                t.e = std::max(est->t_tilde, 1.0);
            }
            if (report.failed) break;
            double max_w = 1.0;
            for (const auto& t : tuples) max_w = std::max(max_w, t.w);
            SamplerParams sp;
            sp.lambda = dp.lambda;
            sp.rho = dp.rho;
            sp.delta = dp.delta;
            sp.m_bound = std::max(static_cast<double>(n) *
                                      static_cast<double>(n) *
                                      static_cast<double>(n) * max_w,
                                  1.0);
            sp.c_s = cfg.sampler_c_s;
            sp.target_size = static_cast<std::size_t>(dp.tuple_target);
            Rng sample_rng = root.split();
            tuples = importance_sample(tuples, sp, sample_rng);
            if (hook) hook({PipelineEvent::AfterCompact, iteration, tuples, psi});
        } else {
            // Split: each tuple becomes up to 3 reweighted children.
            std::vector<WeightedTuple> children;
            children.reserve(tuples.size() * 3);
            for (auto& t : tuples) {
                Rng split_rng = root.split();
                SparsifyResult sub =
                    tripartite_sparsify(t.a, t.b, t.c, 3, split_rng);
                for (auto& parts : sub.tuples) {
                    if (parts[0].empty() || parts[1].empty() ||
                        parts[2].empty()) {
                        continue;
                    }
                    WeightedTuple child;
                    child.a = std::move(parts[0]);
                    child.b = std::move(parts[1]);
                    child.c = std::move(parts[2]);
                    child.w = t.w * sub.scale;
                    children.push_back(std::move(child));
                }
            }
            tuples = std::move(children);
            if (hook) hook({PipelineEvent::AfterSparsify, iteration, tuples, psi});
        }
    }

    if (!report.failed) {
        // Whatever survived the loop is small; count it exactly.
        for (const auto& t : tuples) {
            psi += t.w * static_cast<double>(
                             count_exact_tripartite(oracle, t.a, t.b, t.c));
        }
    }
    report.t_hat = psi;
    report.mode = EstimateMode::FullPipeline;
    report.iterations = iteration;
    finalize(report, oracle, before, cfg);
    return report;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

u128 ceil_div_u128(u128 a, u128 b) { return (a + b - 1) / b; }

u128 pow_u128(u128 base, unsigned exp) {
    u128 out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

bool mul_u128_checked(u128 a, u128 b, u128& out) {
    if (a != 0 && b > static_cast<u128>(-1) / a) return false;
    out = a * b;
    return true;
}

}  // namespace

bool BudgetBreakdown::within_bound(std::uint64_t c) const {
    if (c == 0) {
        throw std::invalid_argument("within_bound: c must be positive");
    }
    // At the input limits enforced by compute_budget the left side fits
    // comfortably in 128 bits; only the right side can overflow, and an
    // overflowing right side exceeds any representable left side.
    const u128 lhs = total * pow_u128(eps_num, 4);
    u128 rhs = c;
    const u128 factors[] = {u128(d) * d, pow_u128(levels, 18),
                            pow_u128(eps_den, 4)};
    for (u128 f : factors) {
        if (!mul_u128_checked(rhs, f, rhs)) return true;
    }
    return lhs <= rhs;
}

BudgetBreakdown compute_budget(std::uint32_t n, std::uint64_t d,
                               std::uint64_t eps_num, std::uint64_t eps_den) {
    if (n < 2 || n > (1u << 20)) {
        throw std::invalid_argument("compute_budget: n must be in [2, 2^20]");
    }
    if (d < 1 || d > 16) {
        throw std::invalid_argument("compute_budget: d must be in [1, 16]");
    }
    if (eps_num == 0 || eps_den == 0 || eps_num >= eps_den || eps_den > 32) {
        throw std::invalid_argument(
            "compute_budget: need 0 < eps_num < eps_den <= 32");
    }
    BudgetBreakdown b;
    b.n = n;
    b.d = d;
    b.eps_num = eps_num;
    b.eps_den = eps_den;
    b.levels = std::max<std::uint32_t>(ceil_log2(n), 1);
    const u128 levels = b.levels;
    const u128 p2 = u128(eps_num) * eps_num;
    const u128 q2 = u128(eps_den) * eps_den;
    b.tau = ceil_div_u128(u128(324) * d * d * pow_u128(levels, 4) * q2, p2);
    b.alg1_rounds = ceil_div_u128(u128(18) * levels * q2, p2);
    b.decide_cost = u128(16) * b.tau * levels + 1;
    b.step1_budget = b.alg1_rounds * b.decide_cost;
    b.tuple_target = ceil_div_u128(pow_u128(levels, 12) * q2, p2);
    b.active_bound = u128(30) * b.tuple_target;
    const u128 gamma = u128(2000) * levels;
    const u128 verify_cost = (2 * levels + 1) * (levels + 1);
    b.coarse_cost = (3 * levels + 1) * gamma * verify_cost;
    b.step4_per_iteration = b.active_bound * b.decide_cost;
    b.step6_per_iteration = b.active_bound * b.coarse_cost;
    b.iterations = 3 * levels + 2;
    b.total = b.step1_budget +
              b.iterations * (b.step4_per_iteration + b.step6_per_iteration);
    return b;
}

}  // namespace tiq
