#ifndef TIQ_GRAPH_HPP
#define TIQ_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiq/rng.hpp"

namespace tiq {

using Vertex = std::uint32_t;
/// Vertex sets are kept sorted ascending with no duplicates.
using VertexSet = std::vector<Vertex>;
/// Edges are stored normalized with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Error raised while reading an edge-list document; carries the 1-based
/// line number the problem was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph: no self loops, no parallel edges.
/// Adjacency lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    /// Validates and normalizes the edge list; throws std::invalid_argument
    /// on self loops, out-of-range endpoints, or duplicate edges.
    Graph(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {adj_flat_.data() + adj_off_[u], adj_off_[u + 1] - adj_off_[u]};
    }
    std::uint32_t degree(Vertex u) const { return adj_off_[u + 1] - adj_off_[u]; }
    bool has_edge(Vertex u, Vertex v) const;

private:
    std::uint32_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Vertex> adj_flat_;
    std::vector<std::uint32_t> adj_off_ = {0};
};

/// Per-vertex and per-edge triangle incidence counts for a whole graph.
struct TriangleStats {
    std::uint64_t t = 0;                       // total triangles
    std::uint32_t delta_e = 0;                 // max triangles through any single edge
    std::vector<std::uint64_t> per_vertex;     // triangles containing each vertex
    std::vector<std::uint32_t> per_edge;       // aligned with Graph::edges()
};

/// Exhaustive triangle count via shared-neighbor enumeration over edges.
/// Ground truth for everything else in this project.
TriangleStats count_triangles_brute(const Graph& g);

/// Number of triangles with one endpoint in each of a, b, c.
/// Sets must be sorted, duplicate-free, in range, and pairwise disjoint;
/// empty sets yield 0.
std::uint64_t count_triangles_tripartite_brute(const Graph& g, const VertexSet& a,
                                               const VertexSet& b, const VertexSet& c);

// ---- generators ------------------------------------------------------

Graph complete_graph(std::uint32_t n);

/// Complete tripartite graph on parts [0,a), [a,a+b), [a+b,a+b+c).
Graph complete_tripartite(std::uint32_t a, std::uint32_t b, std::uint32_t c);

/// G(n,p): each of the C(n,2) pairs kept independently with probability p.
Graph erdos_renyi(std::uint32_t n, double p, Rng& rng);

/// Vertex-disjoint "book" gadgets: each gadget is one spine edge shared by
/// exactly d page triangles, so the max per-edge triangle count is d and the
/// triangle total is gadgets*d. Needs gadgets*(d+2) <= n; leftover vertices
/// stay isolated.
Graph planted_book(std::uint32_t n, std::uint32_t d, std::uint32_t gadgets);

/// Random triangle packing: inserts random triangles while keeping every
/// edge's triangle count at most d (accidental triangles included in the
/// accounting). Stops once exactly target_t triangles exist; throws if the
/// target is not reached within the attempt budget.
Graph triangle_packing(std::uint32_t n, std::uint32_t d, std::uint64_t target_t, Rng& rng);

/// Unit-distance graph of a planar point set: edge iff the pair's distance
/// is 1 within absolute tolerance tol. Per-edge triangle counts are at most
/// 2 (only two apex positions exist for a unit segment in the plane).
Graph unit_distance(const std::vector<std::pair<double, double>>& points, double tol = 1e-9);

/// Disjoint union of `cliques` copies of the complete graph on clique_size
/// vertices; needs cliques*clique_size <= n.
Graph clique_union(std::uint32_t n, std::uint32_t clique_size, std::uint32_t cliques);

/// Triangular lattice point set with unit spacing; pairs with unit-distance
/// generation to produce dense bounded-sharing instances.
std::vector<std::pair<double, double>> triangular_lattice_points(std::uint32_t rows,
                                                                 std::uint32_t cols);

enum class Family {
    ErdosRenyi,
    PlantedBook,
    UnitDistance,
    CliqueUnion,
    TrianglePacking,
};

/// Parameter bundle for generate(); unused fields are ignored per family.
struct GeneratorSpec {
    Family family = Family::ErdosRenyi;
    std::uint32_t n = 0;
    double p = 0.0;                                   // ErdosRenyi
    std::uint32_t d = 1;                              // PlantedBook, TrianglePacking
    std::uint32_t gadgets = 0;                        // PlantedBook
    std::uint64_t target_t = 0;                       // TrianglePacking
    std::uint32_t clique_size = 0;                    // CliqueUnion
    std::uint32_t cliques = 0;                        // CliqueUnion
    std::vector<std::pair<double, double>> points;    // UnitDistance
    double tol = 1e-9;                                // UnitDistance
};

/// Dispatch to the family generators; a fixed seed gives an identical graph.
Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

// ---- edge-list documents ---------------------------------------------
//
// Format: first line is the vertex count n; every following line is one
// edge "u v" with 0-based endpoints, each unordered pair appearing once.

Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace tiq

#endif
