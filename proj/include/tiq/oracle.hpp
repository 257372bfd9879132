#ifndef TIQ_ORACLE_HPP
#define TIQ_ORACLE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "tiq/graph.hpp"

namespace tiq {

/// Accounting phases for oracle traffic. Callers tag every query so the
/// final report can break the budget down by pipeline stage.
enum class Phase : std::uint8_t {
    ThresholdEstimate,
    ExactCount,
    ThresholdDecide,
    Coarse,
    PipelineMisc,
};

inline constexpr std::size_t kPhaseCount = 5;

const char* phase_label(Phase p);

struct QueryLedger {
    std::uint64_t total = 0;
    std::array<std::uint64_t, kPhaseCount> per_phase{};

    void charge(Phase p) {
        ++total;
        ++per_phase[static_cast<std::size_t>(p)];
    }
    void reset() {
        total = 0;
        per_phase.fill(0);
    }
};

/// Membership oracle over a hidden graph: a query asks whether some
/// triangle has one endpoint in each of three non-empty, pairwise-disjoint
/// vertex sets (i.e. whether the triple fails to be tripartite-independent).
/// Exposes only the vertex count and the yes/no answers; every answer
/// charges exactly one ledger unit to the caller-supplied phase.
class TisOracle {
public:
    /// Takes its own copy of the graph so the oracle never outlives it.
    explicit TisOracle(Graph g)
        : g_(std::move(g)), stamp_(g_.n(), 0) {}

    std::uint32_t n() const { return g_.n(); }

    bool query(std::span<const Vertex> a, std::span<const Vertex> b,
               std::span<const Vertex> c, Phase phase);

    const QueryLedger& ledger() const { return ledger_; }
    QueryLedger snapshot() const { return ledger_; }
    void reset_ledger() { ledger_.reset(); }

    /// The simulated graph behind the oracle; test and audit code only;
    /// estimators must touch nothing but n() and query().
    const Graph& graph() const { return g_; }

private:
    bool witness_exists(std::span<const Vertex> pivot, std::uint64_t role_y,
                        std::uint64_t role_z) const;

    Graph g_;
    QueryLedger ledger_;
    mutable std::vector<std::uint64_t> stamp_;
    mutable std::uint64_t epoch_ = 0;
};

} // namespace tiq

#endif
