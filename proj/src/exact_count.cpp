#include "tiq/exact_count.hpp"

#include <cmath>

#include "tiq/mathutil.hpp"

namespace tiq {

namespace {

// One sorted side of a recursion node: a contiguous slice [lo, hi) of the
// root set. Halving keeps slices contiguous, so the whole tree walks three
// fixed arrays without copying.
struct Slice {
    std::uint32_t lo, hi;
    std::uint32_t size() const { return hi - lo; }
};

struct TreeWalk {
    TisOracle* oracle;
    const Vertex* base[3];
    Phase phase;
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;
    bool aborted = false;

    std::span<const Vertex> side(int s, Slice sl) const {
        return {base[s] + sl.lo, sl.hi - sl.lo};
    }

    void visit(Slice a, Slice b, Slice c) {
        if (aborted) return;
        if (++nodes > node_budget) {
            aborted = true; // budget trip happens before the query fires
            return;
        }
        if (!oracle->query(side(0, a), side(1, b), side(2, c), phase)) return;
        if (a.size() == 1 && b.size() == 1 && c.size() == 1) {
            ++found;
            ++nodes; // counted-triangle marker child; a node, never a query
            if (nodes > node_budget) aborted = true;
            return;
        }
        Slice ha[2], hb[2], hc[2];
        const int na = split(a, ha), nb = split(b, hb), nc = split(c, hc);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < nc; ++k) {
                    visit(ha[i], hb[j], hc[k]);
                    if (aborted) return;
                }
    }

    // sides of size 1 pass through whole; larger sides split ceil/floor,
    // the front (smaller sorted ids) taking the ceiling
    static int split(Slice s, Slice out[2]) {
        if (s.size() == 1) {
            out[0] = s;
            return 1;
        }
        const std::uint32_t mid = s.lo + (s.size() + 1) / 2;
        out[0] = {s.lo, mid};
        out[1] = {mid, s.hi};
        return 2;
    }
};

std::uint64_t run_tree(TisOracle& o, const VertexSet& a, const VertexSet& b, const VertexSet& c,
                       std::uint64_t node_budget, Phase phase, bool& aborted) {
    if (a.empty() || b.empty() || c.empty())
        throw std::invalid_argument("tripartite recursion needs non-empty sets");
    TreeWalk walk{&o, {a.data(), b.data(), c.data()}, phase, node_budget};
    walk.visit({0, static_cast<std::uint32_t>(a.size())}, {0, static_cast<std::uint32_t>(b.size())},
               {0, static_cast<std::uint32_t>(c.size())});
    aborted = walk.aborted;
    return walk.found;
}

} // namespace

std::uint64_t count_exact_tripartite(TisOracle& o, const VertexSet& a, const VertexSet& b,
                                     const VertexSet& c) {
    bool aborted = false;
    return run_tree(o, a, b, c, UINT64_MAX, Phase::ExactCount, aborted);
}

ThresholdOutcome decide_threshold_tripartite(TisOracle& o, const VertexSet& a, const VertexSet& b,
                                             const VertexSet& c, std::uint64_t tau, Phase phase) {
    if (tau == 0) throw std::invalid_argument("threshold must be at least 1");
    const std::uint64_t budget = 16 * tau * std::max<std::uint64_t>(ceil_log2(o.n()), 1);
    bool aborted = false;
    const std::uint64_t found = run_tree(o, a, b, c, budget, phase, aborted);
    // a completed recursion decides by the count itself; an overgrown tree
    // already proves the count is above the threshold
    if (aborted || found > tau) return ThresholdOutcome::exceeds();
    return ThresholdOutcome::exact_value(found);
}

ThresholdOutcome threshold_approx_estimate(TisOracle& o, std::uint64_t tau, double eps, Rng& rng) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0,1)");
    if (tau == 0) throw std::invalid_argument("threshold must be at least 1");
    const std::uint32_t n = o.n();
    if (n < 3) return ThresholdOutcome::approx_value(0.0); // no triangle fits

    const std::uint32_t levels = std::max<std::uint32_t>(ceil_log2(n), 1);
    const std::uint64_t rounds = ceil_u64(18.0 * levels / (eps * eps));

    VertexSet parts[3];
    std::uint64_t sum = 0;
    for (std::uint64_t r = 0; r < rounds; ++r) {
        do {
            for (auto& p : parts) p.clear();
            for (Vertex v = 0; v < n; ++v) parts[rng.below(3)].push_back(v);
        } while (parts[0].empty() || parts[1].empty() || parts[2].empty());

        const auto outcome = decide_threshold_tripartite(o, parts[0], parts[1], parts[2], tau,
                                                         Phase::ThresholdEstimate);
        if (outcome.exceeds_threshold()) return ThresholdOutcome::exceeds();
        sum += outcome.exact();
    }
    return ThresholdOutcome::approx_value(4.5 * static_cast<double>(sum) /
                                          static_cast<double>(rounds));
}

} // namespace tiq
