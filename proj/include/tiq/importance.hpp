#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tiq/graph.hpp"
#include "tiq/rng.hpp"

namespace tiq {

struct WeightedTuple {
    VertexSet a;
    VertexSet b;
    VertexSet c;
    double w = 1.0;           // >= 1
    std::optional<double> e;  // coarse estimate for the tuple, >= 1 when set
};

struct SamplerParams {
    double lambda = 0.1;  // relative-error budget, in (0,1)
    double rho = 1.0;     // bracket factor: e/rho <= t <= e*rho, >= 1
    double delta = 0.01;  // failure probability, in (0,1)
    double m_bound = 1.0; // upper bound M on sum of w_i * t_i, >= 1
    double c_s = 1.0;     // leading constant in the size formula
    // When set, overrides the formula: the output size becomes
    // min(input size, *target_size).
    std::optional<std::size_t> target_size;
};

// Output-size bound s = min(r, ceil(c_s * lambda^-2 * rho^4 * log2(M) *
// (log2(log2(M)) + log2(1/delta)))), or min(r, *target_size) when the
// override is set. A non-positive formula value yields 0.
std::size_t sample_size_bound(const SamplerParams& params, std::size_t r);

// Shrinks the tuple list to at most s entries while preserving the weighted
// triangle mass in expectation: draws s indices with probability
// proportional to w_i * e_i, gives each draw weight T / (s * e_i) where
// T = sum of w_j * e_j, merges duplicate draws by summing their weights,
// then clamps weights below 1 up to 1 with a compensating rescale of the
// rest so that sum of w' * e stays at T. Every input tuple must carry e.
// Returns the input unchanged when r <= s or when s is 0.
std::vector<WeightedTuple> importance_sample(
    const std::vector<WeightedTuple>& tuples, const SamplerParams& params,
    Rng& rng);

}  // namespace tiq
