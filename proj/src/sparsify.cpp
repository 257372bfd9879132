#include "tiq/sparsify.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiq {

std::array<Color, 3> color_triple(std::uint32_t k, Color i) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    const Color m = 3 * k;
    if (i < 1 || i > m) throw std::invalid_argument("color out of range");
    return {i, 1 + (i + k - 1) % m, 1 + (i + 2 * k - 1) % m};
}

ColoringAssignment color_vertices(const VertexSet& vertices, std::uint32_t k, Rng& rng) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    ColoringAssignment ca;
    ca.k = k;
    ca.vertices = vertices;
    const Vertex top = vertices.empty() ? 0 : vertices.back() + 1;
    ca.color_of.assign(top, 0);
    for (Vertex v : vertices) ca.color_of[v] = 1 + rng.below(3 * k);
    return ca;
}

bool is_properly_colored(const std::array<Vertex, 3>& tri, const ColoringAssignment& ca) {
    std::array<Color, 3> got = {ca.color(tri[0]), ca.color(tri[1]), ca.color(tri[2])};
    for (Color c : got)
        if (c == 0) throw std::invalid_argument("triangle vertex is uncolored");
    std::sort(got.begin(), got.end());
    if (got[0] == got[1] || got[1] == got[2]) return false;
    for (Color i = 1; i <= 3 * ca.k; ++i) {
        auto want = color_triple(ca.k, i);
        std::sort(want.begin(), want.end());
        if (want == got) return true;
    }
    return false;
}

SparsifyResult general_sparsify(const VertexSet& g_vertices, std::uint32_t k, Rng& rng) {
    const auto ca = color_vertices(g_vertices, k, rng);
    std::vector<VertexSet> by_color(3 * k);
    for (Vertex v : g_vertices) by_color[ca.color_of[v] - 1].push_back(v);

    SparsifyResult out;
    out.scale = 4.5 * k * k;
    out.tuples.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i)
        out.tuples.push_back({std::move(by_color[i]), std::move(by_color[k + i]),
                              std::move(by_color[2 * k + i])});
    return out;
}

namespace {

void require_sorted_disjoint(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
    const VertexSet* sides[3] = {&a, &b, &c};
    for (const auto* s : sides)
        if (!std::is_sorted(s->begin(), s->end()) ||
            std::adjacent_find(s->begin(), s->end()) != s->end())
            throw std::invalid_argument("tripartite side not sorted unique");
    auto overlap = [](const VertexSet& x, const VertexSet& y) {
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] < y[j])
                ++i;
            else if (x[i] > y[j])
                ++j;
            else
                return true;
        }
        return false;
    };
    if (overlap(a, b) || overlap(a, c) || overlap(b, c))
        throw std::invalid_argument("tripartite sides overlap");
}

} // namespace

SparsifyResult tripartite_sparsify(const VertexSet& a, const VertexSet& b, const VertexSet& c,
                                   std::uint32_t k, Rng& rng) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    require_sorted_disjoint(a, b, c);
    SparsifyResult out;
    out.scale = static_cast<double>(k) * k;
    out.tuples.assign(k, {});

    const VertexSet* sides[3] = {&a, &b, &c};
    for (int s = 0; s < 3; ++s)
        for (Vertex v : *sides[s]) out.tuples[rng.below(k)][s].push_back(v);
    return out;
}

std::uint64_t evaluate_proper_count(const Graph& g, SparsifyResult& result) {
    std::uint64_t f = 0;
    for (const auto& tuple : result.tuples)
        f += count_triangles_tripartite_brute(g, tuple[0], tuple[1], tuple[2]);
    result.proper_count = f;
    return f;
}

} // namespace tiq
