#include "tiq/importance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tiq {

namespace {

void validate_params(const SamplerParams& p) {
    if (!(p.lambda > 0.0 && p.lambda < 1.0)) {
        throw std::invalid_argument("importance_sample: lambda must be in (0,1)");
    }
    if (!(p.rho >= 1.0)) {
        throw std::invalid_argument("importance_sample: rho must be >= 1");
    }
    if (!(p.delta > 0.0 && p.delta < 1.0)) {
        throw std::invalid_argument("importance_sample: delta must be in (0,1)");
    }
    if (!(p.m_bound >= 1.0)) {
        throw std::invalid_argument("importance_sample: m_bound must be >= 1");
    }
    if (!(p.c_s > 0.0)) {
        throw std::invalid_argument("importance_sample: c_s must be positive");
    }
}

}  // namespace

std::size_t sample_size_bound(const SamplerParams& params, std::size_t r) {
    validate_params(params);
    if (params.target_size) return std::min(r, *params.target_size);
    const double lg = std::log2(params.m_bound);
    const double lglg = lg > 0.0 ? std::log2(lg) : 0.0;
    const double raw = params.c_s / (params.lambda * params.lambda) *
                       std::pow(params.rho, 4.0) * lg *
                       (lglg + std::log2(1.0 / params.delta));
    if (!(raw > 0.0)) return 0;
    const double ceiled = std::ceil(raw);
    if (ceiled >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
        return r;
    }
    return std::min(r, static_cast<std::size_t>(ceiled));
}

std::vector<WeightedTuple> importance_sample(
    const std::vector<WeightedTuple>& tuples, const SamplerParams& params,
    Rng& rng) {
    validate_params(params);
    for (const WeightedTuple& t : tuples) {
        if (!(t.w >= 1.0)) {
            throw std::invalid_argument("importance_sample: tuple weight below 1");
        }
        if (!t.e) {
            throw std::invalid_argument(
                "importance_sample: tuple missing coarse estimate");
        }
        if (!(*t.e >= 1.0)) {
            throw std::invalid_argument(
                "importance_sample: tuple estimate below 1");
        }
    }
    const std::size_t r = tuples.size();
    const std::size_t s = sample_size_bound(params, r);
    if (s == 0 || r <= s) return tuples;

    std::vector<double> cum(r);
    double total = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        total += tuples[i].w * *tuples[i].e;
        cum[i] = total;
    }

    std::vector<std::uint64_t> hits(r, 0);
    for (std::size_t draw = 0; draw < s; ++draw) {
        const double u = rng.uniform01() * total;
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const std::size_t idx =
            it == cum.end() ? r - 1
                            : static_cast<std::size_t>(it - cum.begin());
        ++hits[idx];
    }

    // Merge duplicate draws: index i drawn h times carries weight
    // h * total / (s * e_i). Output follows input order.
    std::vector<WeightedTuple> out;
    out.reserve(std::min(s, r));
    for (std::size_t i = 0; i < r; ++i) {
        if (hits[i] == 0) continue;
        WeightedTuple copy = tuples[i];
        copy.w = static_cast<double>(hits[i]) * total /
                 (static_cast<double>(s) * *tuples[i].e);
        out.push_back(std::move(copy));
    }

    // Clamp weights below 1 up to 1 and rescale the rest so that
    // sum(w * e) stays at total. Because every input weight is >= 1,
    // total >= sum of all e values, so the rescale factor stays positive.
    std::vector<char> clamped(out.size(), 0);
    while (true) {
        double clamped_mass = 0.0;
        double free_mass = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (clamped[i]) {
                clamped_mass += *out[i].e;
            } else {
                free_mass += out[i].w * *out[i].e;
            }
        }
        if (free_mass <= 0.0) break;
        const double scale = (total - clamped_mass) / free_mass;
        bool grew = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!clamped[i] && out[i].w * scale < 1.0) {
                clamped[i] = 1;
                grew = true;
            }
        }
        if (!grew) {
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (!clamped[i]) out[i].w *= scale;
            }
            break;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (clamped[i]) out[i].w = 1.0;
    }
    return out;
}

}  // namespace tiq
