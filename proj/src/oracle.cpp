#include "tiq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiq {

const char* phase_label(Phase p) {
    switch (p) {
        case Phase::ThresholdEstimate: return "threshold-estimate";
        case Phase::ExactCount: return "exact-count";
        case Phase::ThresholdDecide: return "threshold-decide";
        case Phase::Coarse: return "coarse";
        case Phase::PipelineMisc: return "pipeline-misc";
    }
    return "unknown";
}

bool TisOracle::query(std::span<const Vertex> a, std::span<const Vertex> b,
                      std::span<const Vertex> c, Phase phase) {
    if (a.empty() || b.empty() || c.empty())
        throw std::invalid_argument("oracle query with an empty set");

    // stamp membership; the epoch trick avoids clearing between queries
    epoch_ += 4;
    const std::span<const Vertex> sets[3] = {a, b, c};
    for (std::uint64_t role = 1; role <= 3; ++role) {
        Vertex prev = 0;
        bool first = true;
        for (Vertex v : sets[role - 1]) {
            if (v >= g_.n()) throw std::invalid_argument("oracle query vertex out of range");
            if (!first && v <= prev)
                throw std::invalid_argument("oracle query set not sorted unique");
            if (stamp_[v] >= epoch_)
                throw std::invalid_argument("oracle query sets overlap");
            stamp_[v] = epoch_ + role;
            prev = v;
            first = false;
        }
    }

    ledger_.charge(phase);

    // pivot on the smallest set; role order of the other two is irrelevant
    int p = 0;
    if (sets[1].size() < sets[p].size()) p = 1;
    if (sets[2].size() < sets[p].size()) p = 2;
    const std::uint64_t roles[3] = {epoch_ + 1, epoch_ + 2, epoch_ + 3};
    return witness_exists(sets[p], roles[(p + 1) % 3], roles[(p + 2) % 3]);
}

bool TisOracle::witness_exists(std::span<const Vertex> pivot, std::uint64_t role_y,
                               std::uint64_t role_z) const {
    for (Vertex u : pivot) {
        const auto nu = g_.neighbors(u);
        for (Vertex y : nu) {
            if (stamp_[y] != role_y) continue;
            const auto ny = g_.neighbors(y);
            const auto shorter = nu.size() <= ny.size() ? nu : ny;
            const auto longer = nu.size() <= ny.size() ? ny : nu;
            for (Vertex z : shorter) {
                if (stamp_[z] != role_z) continue;
                if (std::binary_search(longer.begin(), longer.end(), z)) return true;
            }
        }
    }
    return false;
}

} // namespace tiq
