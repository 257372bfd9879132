#pragma once

#include <cstdint>
#include <optional>

#include "tiq/graph.hpp"
#include "tiq/oracle.hpp"
#include "tiq/rng.hpp"

namespace tiq {

struct CoarseParams {
    // Verification repetitions per grid value. A grid value is accepted when
    // at least gamma/10 of its repetitions accept.
    std::uint64_t gamma = 200;
};

struct CoarseResult {
    double t_tilde = 0.0;       // accepted_at / ceil_log2(n)
    double accepted_at = 0.0;   // grid value that met the acceptance bar
    double bracket = 0.0;       // 64 * ceil_log2(n)^2; truth lies within
                                // t_tilde * [1, bracket^2) when the estimate
                                // is sound
};

// One verification probe of the guess t_hat at scale pair (i, j). Samples
// subsets of a, b, c with per-element probabilities min(2^i / t_hat, 1),
// min(2^(j-i) * L, 1) and 2^-j where L = ceil_log2(n). Issues one oracle
// query when all three samples are non-empty; an empty sample answers NO
// without spending a query. Sampling is lazy: b is not sampled when the a
// sample is empty, and likewise for c.
bool verify_probe(TisOracle& oracle, const VertexSet& a, const VertexSet& b,
                  const VertexSet& c, std::uint32_t i, std::uint32_t j,
                  double t_hat, Rng& rng);

// Accept/reject pass for the guess t_hat: probes scale pairs i = 2L..0,
// j = L..0 and accepts on the first YES. At most (2L+1)*(L+1) queries.
bool verify_estimate(TisOracle& oracle, const VertexSet& a, const VertexSet& b,
                     const VertexSet& c, double t_hat, Rng& rng);

// Walks the halving grid t_hat = max(n^3 / 2^s, 1) for s = 0..3L and runs
// params.gamma verification passes per value. Returns the first grid value
// whose accept count reaches gamma/10, scaled down by L; nullopt when every
// grid value is rejected.
std::optional<CoarseResult> coarse_estimate(TisOracle& oracle,
                                            const VertexSet& a,
                                            const VertexSet& b,
                                            const VertexSet& c,
                                            const CoarseParams& params,
                                            Rng& rng);

}  // namespace tiq
