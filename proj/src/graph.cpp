#include "tiq/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace tiq {

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n_));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    adj_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++adj_off_[u + 1];
        ++adj_off_[v + 1];
    }
    for (std::uint32_t i = 0; i < n_; ++i) adj_off_[i + 1] += adj_off_[i];
    adj_flat_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(adj_off_.begin(), adj_off_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_flat_[cursor[u]++] = v;
        adj_flat_[cursor[v]++] = u;
    }
    // neighbor lists come out sorted because the edge list is sorted and
    // (u,v) with u<v appends v after all earlier, smaller neighbors
    for (std::uint32_t u = 0; u < n_; ++u) {
        auto nb = neighbors(u);
        if (!std::is_sorted(nb.begin(), nb.end()))
            std::sort(adj_flat_.begin() + adj_off_[u], adj_flat_.begin() + adj_off_[u + 1]);
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    auto a = neighbors(u), b = neighbors(v);
    auto probe = a.size() <= b.size() ? a : b;
    Vertex target = a.size() <= b.size() ? v : u;
    return std::binary_search(probe.begin(), probe.end(), target);
}

TriangleStats count_triangles_brute(const Graph& g) {
    TriangleStats stats;
    stats.per_vertex.assign(g.n(), 0);
    stats.per_edge.assign(g.m(), 0);
    std::uint64_t incidences = 0;
    for (std::size_t e = 0; e < g.m(); ++e) {
        const auto [u, v] = g.edges()[e];
        auto nu = g.neighbors(u), nv = g.neighbors(v);
        std::uint32_t common = 0;
        // sorted-list intersection; each common neighbor w closes a triangle
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                ++common;
                // credit the opposite vertex once per edge so that over the
                // three edges of a triangle each corner is counted exactly once
                ++stats.per_vertex[nu[i]];
                ++i;
                ++j;
            }
        }
        stats.per_edge[e] = common;
        stats.delta_e = std::max(stats.delta_e, common);
        incidences += common;
    }
    stats.t = incidences / 3;
    return stats;
}

namespace {

void check_tripartite_args(const Graph& g, const VertexSet& a, const VertexSet& b,
                           const VertexSet& c, std::vector<std::uint8_t>& mark) {
    mark.assign(g.n(), 0);
    const VertexSet* sets[3] = {&a, &b, &c};
    for (int s = 0; s < 3; ++s) {
        Vertex prev = 0;
        bool first = true;
        for (Vertex v : *sets[s]) {
            if (v >= g.n()) throw std::invalid_argument("tripartite set vertex out of range");
            if (!first && v <= prev) throw std::invalid_argument("tripartite set not sorted unique");
            if (mark[v]) throw std::invalid_argument("tripartite sets overlap at vertex " +
                                                     std::to_string(v));
            mark[v] = static_cast<std::uint8_t>(s + 1);
            prev = v;
            first = false;
        }
    }
}

} // namespace

std::uint64_t count_triangles_tripartite_brute(const Graph& g, const VertexSet& a,
                                               const VertexSet& b, const VertexSet& c) {
    std::vector<std::uint8_t> mark;
    check_tripartite_args(g, a, b, c, mark);
    std::uint64_t count = 0;
    for (Vertex x : a) {
        for (Vertex y : g.neighbors(x)) {
            if (mark[y] != 2) continue;
            // walk the shorter adjacency of {x,y}, membership-test the other
            auto nx = g.neighbors(x), ny = g.neighbors(y);
            auto shorter = nx.size() <= ny.size() ? nx : ny;
            for (Vertex z : shorter) {
                if (mark[z] != 3) continue;
                if (g.has_edge(x, z) && g.has_edge(y, z)) ++count;
            }
        }
    }
    return count;
}

// ---- generators ------------------------------------------------------

Graph complete_graph(std::uint32_t n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complete_tripartite(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const std::uint32_t n = a + b + c;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < n; ++v) edges.emplace_back(u, v);
    for (Vertex u = a; u < a + b; ++u)
        for (Vertex v = a + b; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph erdos_renyi(std::uint32_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph planted_book(std::uint32_t n, std::uint32_t d, std::uint32_t gadgets) {
    if (d == 0) throw std::invalid_argument("book gadget needs d >= 1");
    if (static_cast<std::uint64_t>(gadgets) * (d + 2) > n)
        throw std::invalid_argument("book family needs gadgets*(d+2) <= n");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < gadgets; ++i) {
        const Vertex base = i * (d + 2);
        const Vertex u = base, v = base + 1;
        edges.emplace_back(u, v);
        for (std::uint32_t page = 0; page < d; ++page) {
            const Vertex w = base + 2 + page;
            edges.emplace_back(u, w);
            edges.emplace_back(v, w);
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

inline std::uint64_t edge_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph triangle_packing(std::uint32_t n, std::uint32_t d, std::uint64_t target_t, Rng& rng) {
    if (n < 3) throw std::invalid_argument("triangle packing needs n >= 3");
    if (d == 0) throw std::invalid_argument("triangle packing needs d >= 1");
    std::vector<std::unordered_set<Vertex>> adj(n);
    std::unordered_map<std::uint64_t, std::uint32_t> per_edge;
    std::uint64_t t_now = 0;
    const std::uint64_t attempt_budget = 400 * target_t + 20000;

    auto common_with = [&](Vertex u, Vertex v, auto&& fn) {
        const auto& small = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        const auto& big = adj[u].size() <= adj[v].size() ? adj[v] : adj[u];
        for (Vertex w : small)
            if (big.count(w)) fn(w);
    };

    for (std::uint64_t attempt = 0; t_now < target_t; ++attempt) {
        if (attempt >= attempt_budget)
            throw std::invalid_argument("triangle packing target unreachable: reached " +
                                        std::to_string(t_now) + " of " + std::to_string(target_t));
        Vertex a = rng.below(n), b = rng.below(n), c = rng.below(n);
        if (a == b || a == c || b == c) continue;

        Edge want[3] = {{a, b}, {a, c}, {b, c}};
        std::vector<Edge> missing;
        for (auto [u, v] : want)
            if (!adj[u].count(v)) missing.emplace_back(u, v);
        if (missing.empty()) continue;

        // insert the absent edges, logging every triangle each one closes
        std::vector<std::array<Vertex, 3>> created;
        for (auto [u, v] : missing) {
            common_with(u, v, [&](Vertex w) { created.push_back({u, v, w}); });
            adj[u].insert(v);
            adj[v].insert(u);
        }

        bool ok = t_now + created.size() <= target_t;
        std::unordered_map<std::uint64_t, std::uint32_t> bump;
        if (ok) {
            for (const auto& tri : created) {
                ++bump[edge_key(tri[0], tri[1])];
                ++bump[edge_key(tri[0], tri[2])];
                ++bump[edge_key(tri[1], tri[2])];
            }
            for (const auto& [key, inc] : bump) {
                auto it = per_edge.find(key);
                const std::uint32_t base = it == per_edge.end() ? 0 : it->second;
                if (base + inc > d) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            for (auto [u, v] : missing) {
                adj[u].erase(v);
                adj[v].erase(u);
            }
            continue;
        }
        for (const auto& [key, inc] : bump) per_edge[key] += inc;
        t_now += created.size();
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph unit_distance(const std::vector<std::pair<double, double>>& points, double tol) {
    const std::size_t n = points.size();
    if (n > UINT32_MAX) throw std::invalid_argument("too many points");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = points[i].first - points[j].first;
            const double dy = points[i].second - points[j].second;
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (std::abs(dist - 1.0) <= tol)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

Graph clique_union(std::uint32_t n, std::uint32_t clique_size, std::uint32_t cliques) {
    if (static_cast<std::uint64_t>(clique_size) * cliques > n)
        throw std::invalid_argument("clique union needs cliques*clique_size <= n");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < cliques; ++i) {
        const Vertex base = i * clique_size;
        for (Vertex u = 0; u < clique_size; ++u)
            for (Vertex v = u + 1; v < clique_size; ++v)
                edges.emplace_back(base + u, base + v);
    }
    return Graph(n, std::move(edges));
}

std::vector<std::pair<double, double>> triangular_lattice_points(std::uint32_t rows,
                                                                 std::uint32_t cols) {
    std::vector<std::pair<double, double>> points;
    points.reserve(static_cast<std::size_t>(rows) * cols);
    const double root3_half = std::sqrt(3.0) / 2.0;
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c)
            points.emplace_back(c + 0.5 * r, r * root3_half);
    return points;
}

Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    switch (spec.family) {
        case Family::ErdosRenyi:
            return erdos_renyi(spec.n, spec.p, rng);
        case Family::PlantedBook:
            return planted_book(spec.n, spec.d, spec.gadgets);
        case Family::UnitDistance:
            return unit_distance(spec.points, spec.tol);
        case Family::CliqueUnion:
            return clique_union(spec.n, spec.clique_size, spec.cliques);
        case Family::TrianglePacking:
            return triangle_packing(spec.n, spec.d, spec.target_t, rng);
    }
    throw std::invalid_argument("unknown generator family");
}

// ---- edge-list documents ---------------------------------------------

namespace {

bool parse_u32(std::string_view token, std::uint32_t& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing vertex-count header");
    ++lineno;
    auto header = split_ws(line);
    std::uint32_t n = 0;
    if (header.size() != 1 || !parse_u32(header[0], n))
        throw ParseError(lineno, "header must be a single vertex count");

    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_ws(line);
        if (fields.empty()) throw ParseError(lineno, "blank line");
        std::uint32_t u = 0, v = 0;
        if (fields.size() != 2 || !parse_u32(fields[0], u) || !parse_u32(fields[1], v))
            throw ParseError(lineno, "expected two vertex ids");
        if (u == v) throw ParseError(lineno, "self loop at vertex " + std::to_string(u));
        if (u >= n || v >= n)
            throw ParseError(lineno, "vertex id out of range (n=" + std::to_string(n) + ")");
        const std::uint64_t key = edge_key(u, v);
        auto [it, fresh] = seen.emplace(key, lineno);
        if (!fresh)
            throw ParseError(lineno, "duplicate edge, first seen on line " +
                                         std::to_string(it->second));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace tiq
