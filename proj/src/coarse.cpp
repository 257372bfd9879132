#include "tiq/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tiq/mathutil.hpp"

namespace tiq {

namespace {

// Bernoulli-samples src into out with per-element probability p. Returns
// whether the sample is non-empty. p >= 1 copies src whole and p <= 0
// clears out; neither consumes randomness.
bool sample_subset(const VertexSet& src, double p, Rng& rng, VertexSet& out) {
    out.clear();
    if (p >= 1.0) {
        out = src;
        return !out.empty();
    }
    if (p <= 0.0) return false;
    for (Vertex v : src) {
        if (rng.bernoulli(p)) out.push_back(v);
    }
    return !out.empty();
}

bool probe_impl(TisOracle& oracle, const VertexSet& a, const VertexSet& b,
                const VertexSet& c, int i, int j, double t_hat, Rng& rng,
                VertexSet& sa, VertexSet& sb, VertexSet& sc) {
    const auto levels =
        std::max<std::uint32_t>(ceil_log2(oracle.n()), 1);
    const double p_a = std::min(std::ldexp(1.0, i) / t_hat, 1.0);
    const double p_b =
        std::min(std::ldexp(1.0, j - i) * static_cast<double>(levels), 1.0);
    const double p_c = std::ldexp(1.0, -j);
    if (!sample_subset(a, p_a, rng, sa)) return false;
    if (!sample_subset(b, p_b, rng, sb)) return false;
    if (!sample_subset(c, p_c, rng, sc)) return false;
    return oracle.query(sa, sb, sc, Phase::Coarse);
}

}  // namespace

bool verify_probe(TisOracle& oracle, const VertexSet& a, const VertexSet& b,
                  const VertexSet& c, std::uint32_t i, std::uint32_t j,
                  double t_hat, Rng& rng) {
    if (t_hat < 1.0) throw std::invalid_argument("verify_probe: t_hat < 1");
    VertexSet sa, sb, sc;
    return probe_impl(oracle, a, b, c, static_cast<int>(i),
                      static_cast<int>(j), t_hat, rng, sa, sb, sc);
}

bool verify_estimate(TisOracle& oracle, const VertexSet& a, const VertexSet& b,
                     const VertexSet& c, double t_hat, Rng& rng) {
    if (t_hat < 1.0) throw std::invalid_argument("verify_estimate: t_hat < 1");
    const int levels =
        static_cast<int>(std::max<std::uint32_t>(ceil_log2(oracle.n()), 1));
    VertexSet sa, sb, sc;
    for (int i = 2 * levels; i >= 0; --i) {
        for (int j = levels; j >= 0; --j) {
            if (probe_impl(oracle, a, b, c, i, j, t_hat, rng, sa, sb, sc)) {
                return true;
            }
        }
    }
    return false;
}

std::optional<CoarseResult> coarse_estimate(TisOracle& oracle,
                                            const VertexSet& a,
                                            const VertexSet& b,
                                            const VertexSet& c,
                                            const CoarseParams& params,
                                            Rng& rng) {
    if (params.gamma == 0) {
        throw std::invalid_argument("coarse_estimate: gamma must be positive");
    }
    const auto levels =
        std::max<std::uint32_t>(ceil_log2(oracle.n()), 1);
    const double n_cubed = static_cast<double>(oracle.n()) *
                           static_cast<double>(oracle.n()) *
                           static_cast<double>(oracle.n());
    // Acceptance bar: at least a tenth of the verification passes.
    const std::uint64_t bar = (params.gamma + 9) / 10;
    for (std::uint32_t s = 0; s <= 3 * levels; ++s) {
        const double t_hat =
            std::max(std::ldexp(n_cubed, -static_cast<int>(s)), 1.0);
        std::uint64_t accepts = 0;
        for (std::uint64_t rep = 0; rep < params.gamma; ++rep) {
            if (verify_estimate(oracle, a, b, c, t_hat, rng)) ++accepts;
            // The decision is fixed once the bar is reached or becomes
            // unreachable; stop spending queries either way.
            if (accepts >= bar) break;
            if (accepts + (params.gamma - rep - 1) < bar) break;
        }
        if (accepts >= bar) {
            CoarseResult result;
            result.accepted_at = t_hat;
            result.t_tilde = t_hat / static_cast<double>(levels);
            result.bracket = 64.0 * static_cast<double>(levels) *
                             static_cast<double>(levels);
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace tiq
