#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tiq/importance.hpp"
#include "tiq/oracle.hpp"
#include "tiq/rng.hpp"

namespace tiq {

enum class Preset { Theoretical, Practical };
enum class EstimateMode { Exhaustive, Threshold, FullPipeline };

const char* preset_label(Preset p);
const char* mode_label(EstimateMode m);

struct EstimatorConfig {
    double eps = 0.2;      // target relative error, in (0,1)
    std::uint32_t d = 1;   // asserted per-edge triangle bound
    Preset preset = Preset::Practical;
    std::uint64_t seed = 0;

    // Leading constants. The practical factory shrinks kappa1/kappa2 and caps
    // the derived threshold and tuple target so desk-scale runs actually
    // exercise the full machinery; the theoretical factory keeps the
    // guarantee-grade constants for formula audits.
    double kappa1 = 2.0;
    double kappa2 = 2.0;
    double kappa3 = 1.0;

    std::optional<std::uint64_t> gamma_override;   // coarse verification reps
    std::optional<std::uint64_t> n_cap_override;   // cap on the tuple target N
    std::optional<std::uint64_t> tau_cap_override; // cap on the threshold tau
    std::optional<std::uint32_t> max_iterations_override;

    std::uint32_t compact_trigger = 10;  // compact when r > compact_trigger*N
    double sampler_c_s = 1.0;            // passed through to the sampler
    double budget_c = 1e6;               // C in the per-run budget assertion

    static EstimatorConfig theoretical(double eps, std::uint32_t d,
                                       std::uint64_t seed);
    static EstimatorConfig practical(double eps, std::uint32_t d,
                                     std::uint64_t seed);
};

struct DerivedParams {
    std::uint32_t n = 0;
    std::uint32_t levels = 1;        // ceil_log2(n), at least 1
    std::uint64_t tau = 1;           // decision threshold
    std::uint64_t tuple_target = 1;  // N, the post-compaction tuple count
    std::uint64_t gamma = 200;       // coarse verification repetitions
    double lambda = 0.1;             // sampler relative-error budget
    double rho = 1.0;                // sampler bracket factor
    double delta = 0.01;             // sampler failure probability
    std::uint32_t max_iterations = 2;
    bool exhaustive_regime = false;  // the eps range where full enumeration
                                     // is cheaper than the pipeline
};

DerivedParams derive_params(const EstimatorConfig& cfg, std::uint32_t n);

struct EstimateReport {
    double t_hat = 0.0;
    EstimateMode mode = EstimateMode::FullPipeline;
    std::uint32_t iterations = 0;
    QueryLedger ledger;  // queries charged by this run only
    bool failed = false;
    std::string failure_reason;
    DerivedParams params;
    double budget_bound = 0.0;  // budget_c * d^2 * levels^18 / eps^4
    bool within_budget = true;
};

// Test hooks: the pipeline reports its tuple list after each phase of an
// iteration so audits can compare against brute-force ground truth.
enum class PipelineEvent { AfterResolve, AfterCompact, AfterSparsify };

struct PipelineSnapshot {
    PipelineEvent event;
    std::uint32_t iteration;  // 1-based
    const std::vector<WeightedTuple>& tuples;
    double psi;
};
using PipelineHook = std::function<void(const PipelineSnapshot&)>;

// Asks the oracle about every singleton triple {a},{b},{c}; the YES count
// equals the graph's triangle count. Exactly C(n,3) queries.
std::uint64_t exhaustive_singleton_count(TisOracle& oracle);

// The full estimator. Head runs: exhaustive enumeration when eps is small
// enough that C(n,3) queries fit the budget (theoretical preset only), then
// a threshold-estimation pass that settles all graphs with t <= tau. Larger
// instances go through the iterated split/resolve loop: random 3-coloring
// seeds one weighted tuple; each iteration resolves tuples with at most tau
// triangles exactly, compacts the list by importance sampling when it
// outgrows compact_trigger*N (coarse estimates supply the sampling weights),
// and otherwise splits every tuple into 3 reweighted children. Whatever
// survives max_iterations is counted exactly.
EstimateReport estimate_triangles(TisOracle& oracle,
                                  const EstimatorConfig& cfg,
                                  const PipelineHook& hook = nullptr);

// Analytic query-budget formulas, evaluated in exact integer arithmetic with
// eps given as the rational eps_num/eps_den and the leading constants
// normalized to 1. These mirror the worst-case accounting of the estimator:
// a threshold-estimation head, then per iteration a decide pass over at most
// 30N tuples and a coarse pass at the guarantee-grade repetition count.
using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

struct BudgetBreakdown {
    std::uint32_t n = 0;
    std::uint64_t d = 1;
    std::uint64_t eps_num = 1;
    std::uint64_t eps_den = 1;
    std::uint32_t levels = 1;
    u128 tau = 0;
    u128 alg1_rounds = 0;
    u128 decide_cost = 0;    // 16*tau*levels + 1, one decide call
    u128 step1_budget = 0;   // alg1_rounds * decide_cost
    u128 tuple_target = 0;   // N
    u128 active_bound = 0;   // 30N, peak tuple-list length
    u128 coarse_cost = 0;    // one coarse_estimate call, gamma = 2000*levels
    u128 step4_per_iteration = 0;
    u128 step6_per_iteration = 0;
    u128 iterations = 0;     // 3*levels + 2
    u128 total = 0;

    // total <= c * d^2 * levels^18 / eps^4, compared without division:
    // total * eps_num^4 <= c * d^2 * levels^18 * eps_den^4.
    bool within_bound(std::uint64_t c) const;
};

// Requires n in [2, 2^20], d in [1, 16], 0 < eps_num < eps_den <= 32 so all
// intermediates fit 128 bits.
BudgetBreakdown compute_budget(std::uint32_t n, std::uint64_t d,
                               std::uint64_t eps_num, std::uint64_t eps_den);

}  // namespace tiq
