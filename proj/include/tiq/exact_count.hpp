#ifndef TIQ_EXACT_COUNT_HPP
#define TIQ_EXACT_COUNT_HPP

#include <cstdint>
#include <stdexcept>

#include "tiq/oracle.hpp"
#include "tiq/rng.hpp"

namespace tiq {

/// Result of a threshold query: either the count provably exceeds the
/// threshold, or a count is reported (exact from the recursion, approximate
/// from the sampling estimator). Exactly one branch is populated.
class ThresholdOutcome {
public:
    enum class Kind { Exceeds, Exact, Approx };

    static ThresholdOutcome exceeds() { return ThresholdOutcome(Kind::Exceeds, 0.0, 0); }
    static ThresholdOutcome exact_value(std::uint64_t v) {
        return ThresholdOutcome(Kind::Exact, static_cast<double>(v), v);
    }
    static ThresholdOutcome approx_value(double v) { return ThresholdOutcome(Kind::Approx, v, 0); }

    Kind kind() const { return kind_; }
    bool exceeds_threshold() const { return kind_ == Kind::Exceeds; }

    /// Numeric count; only meaningful when a value branch is populated.
    double value() const {
        if (kind_ == Kind::Exceeds)
            throw std::logic_error("no value: outcome is exceeds-threshold");
        return value_;
    }
    std::uint64_t exact() const {
        if (kind_ != Kind::Exact) throw std::logic_error("outcome has no exact count");
        return exact_;
    }

private:
    ThresholdOutcome(Kind k, double v, std::uint64_t e) : kind_(k), value_(v), exact_(e) {}
    Kind kind_;
    double value_;
    std::uint64_t exact_;
};

/// Exact tripartite triangle count using only oracle answers.
///
/// Recursive halving: a node holds three subsets; a NO answer closes the
/// branch, a YES with all three sides singleton counts one triangle, and
/// any other YES splits every side of size > 1 into its ceil/floor halves
/// (the lexicographically smaller half takes the ceiling) and recurses on
/// all cross products. Query count is at most 16*max(t,1)*ceil_log2(n) for
/// t the returned count. Charged to the exact-count phase.
std::uint64_t count_exact_tripartite(TisOracle& o, const VertexSet& a, const VertexSet& b,
                                     const VertexSet& c);

/// Threshold decision via the same recursion with a node budget of
/// 16*tau*ceil_log2(n): if the tree outgrows the budget the count provably
/// exceeds tau, and a completed recursion answers by comparing the exact
/// count against tau. Returns Exceeds or Exact; uses at most
/// 16*tau*ceil_log2(n) + 1 queries.
ThresholdOutcome decide_threshold_tripartite(TisOracle& o, const VertexSet& a,
                                             const VertexSet& b, const VertexSet& c,
                                             std::uint64_t tau,
                                             Phase phase = Phase::ThresholdDecide);

/// Whole-graph threshold estimator. Runs ceil(18*ceil_log2(n)/eps^2) rounds;
/// each round assigns every vertex to one of three parts uniformly (re-drawn
/// until all parts are non-empty) and resolves the round's tripartite count
/// against tau. Any round that exceeds tau stops the run with Exceeds;
/// otherwise returns Approx 9/(2N) * sum of round counts, a (1 +- eps)
/// estimate of the triangle total when it is at most tau. Charged to the
/// threshold-estimate phase.
ThresholdOutcome threshold_approx_estimate(TisOracle& o, std::uint64_t tau, double eps,
                                           Rng& rng);

} // namespace tiq

#endif
