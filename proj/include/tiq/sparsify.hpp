#ifndef TIQ_SPARSIFY_HPP
#define TIQ_SPARSIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tiq/graph.hpp"
#include "tiq/rng.hpp"

namespace tiq {

using Color = std::uint32_t; // 1-based, in [1, 3k]

/// A uniform coloring of a vertex set with 3k colors.
struct ColoringAssignment {
    std::uint32_t k = 1;
    VertexSet vertices;              // the colored set, sorted
    std::vector<Color> color_of;     // dense by vertex id; 0 = uncolored

    Color color(Vertex v) const { return v < color_of.size() ? color_of[v] : 0; }
};

/// The color triple associated with color i (1-based):
/// { i, 1+((i+k-1) mod 3k), 1+((i+2k-1) mod 3k) }.
/// Exactly k distinct triples arise as sets, namely {i, i+k, i+2k} for
/// i in [1,k], so a uniformly colored triangle is properly colored with
/// probability exactly 2/(9k^2).
std::array<Color, 3> color_triple(std::uint32_t k, Color i);

ColoringAssignment color_vertices(const VertexSet& vertices, std::uint32_t k, Rng& rng);

/// True iff the triangle's three colors are a bijection onto some color
/// triple. All three vertices must be colored.
bool is_properly_colored(const std::array<Vertex, 3>& tri, const ColoringAssignment& ca);

/// A sparsification round: scaled tripartite tuples whose counts estimate
/// the source count. proper_count (the summed tuple count f) stays empty
/// until an audit fills it via evaluate_proper_count; estimator code never
/// touches it.
struct SparsifyResult {
    std::vector<std::array<VertexSet, 3>> tuples;
    double scale = 1.0; // 9k^2/2 for whole-graph rounds, k^2 for tripartite rounds
    std::optional<std::uint64_t> proper_count;
};

/// Whole-graph sparsification: color the given vertices with 3k colors and
/// emit the k tripartitions (V_i, V_{k+i}, V_{2k+i}) with scale 9k^2/2.
/// Parts may come out empty; callers decide how to treat those.
/// scale * sum of tuple counts is an unbiased estimate of the triangle total.
SparsifyResult general_sparsify(const VertexSet& g_vertices, std::uint32_t k, Rng& rng);

/// Tripartite sparsification: split each of a, b, c into k parts uniformly
/// per vertex and emit the k aligned tuples (A_i, B_i, C_i) with scale k^2.
/// scale * sum of tuple counts is an unbiased estimate of t(a,b,c).
SparsifyResult tripartite_sparsify(const VertexSet& a, const VertexSet& b, const VertexSet& c,
                                   std::uint32_t k, Rng& rng);

/// Audit hook (brute force, bypasses the oracle): computes the summed
/// tuple count, stores it in result.proper_count, and returns it.
std::uint64_t evaluate_proper_count(const Graph& g, SparsifyResult& result);

} // namespace tiq

#endif
