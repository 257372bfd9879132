#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "tiq/graph.hpp"
#include "tiq/rng.hpp"

using namespace tiq;

namespace {

// Reference tripartite count with a different enumeration order than the
// library (set-major instead of adjacency-major).
std::uint64_t triple_loop_count(const Graph& g, const VertexSet& a, const VertexSet& b,
                                const VertexSet& c) {
    std::uint64_t count = 0;
    for (Vertex z : c)
        for (Vertex y : b)
            for (Vertex x : a)
                if (g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) ++count;
    return count;
}

std::array<VertexSet, 3> random_tripartition(std::uint32_t n, Rng& rng) {
    std::array<VertexSet, 3> parts;
    for (Vertex v = 0; v < n; ++v) parts[rng.below(3)].push_back(v);
    return parts;
}

} // namespace

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{2, 0}, {0, 1}, {3, 2}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
    auto nb = g.neighbors(2);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 3);

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("brute counts on tiny fixed graphs") {
    SUBCASE("edgeless") {
        auto stats = count_triangles_brute(Graph(5, {}));
        CHECK(stats.t == 0);
        CHECK(stats.delta_e == 0);
    }
    SUBCASE("complete on 4") {
        auto stats = count_triangles_brute(complete_graph(4));
        CHECK(stats.t == 4);
        CHECK(stats.delta_e == 2);
        for (auto dv : stats.per_vertex) CHECK(dv == 3);
        for (auto de : stats.per_edge) CHECK(de == 2);
    }
    SUBCASE("complete on 5") {
        auto stats = count_triangles_brute(complete_graph(5));
        CHECK(stats.t == 10);
        CHECK(stats.delta_e == 3);
    }
}

TEST_CASE("brute-count identities on random graphs") {
    Rng rng(20240517);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = erdos_renyi(24, 0.3, rng);
        auto stats = count_triangles_brute(g);
        const std::uint64_t vertex_sum =
            std::accumulate(stats.per_vertex.begin(), stats.per_vertex.end(), std::uint64_t{0});
        CHECK(vertex_sum == 3 * stats.t);
        std::uint32_t max_edge = 0;
        for (std::size_t e = 0; e < g.m(); ++e) {
            CHECK(stats.per_edge[e] <= stats.t);
            max_edge = std::max(max_edge, stats.per_edge[e]);
        }
        CHECK(stats.delta_e == max_edge);
    }
}

TEST_CASE("tripartite brute count on fixed instances") {
    auto k4 = complete_graph(4);
    CHECK(count_triangles_tripartite_brute(k4, {0}, {1}, {2, 3}) == 2);

    Graph tri_plus_iso(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(count_triangles_tripartite_brute(tri_plus_iso, {0}, {1}, {3}) == 0);
    CHECK(count_triangles_tripartite_brute(tri_plus_iso, {0}, {1}, {2}) == 1);

    // edges inside one part never count
    CHECK(count_triangles_tripartite_brute(k4, {0, 1, 2, 3}, {}, {}) == 0);
    CHECK(count_triangles_tripartite_brute(k4, {0, 1}, {2, 3}, {}) == 0);

    CHECK_THROWS_AS(count_triangles_tripartite_brute(k4, {0}, {0}, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_triangles_tripartite_brute(k4, {0}, {1}, {9}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_triangles_tripartite_brute(k4, {1, 0}, {2}, {3}),
                    std::invalid_argument);
}

TEST_CASE("tripartite brute count matches an independent enumeration") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = erdos_renyi(12, 0.5, rng);
        auto parts = random_tripartition(12, rng);
        const auto lib = count_triangles_tripartite_brute(g, parts[0], parts[1], parts[2]);
        CHECK(lib == triple_loop_count(g, parts[0], parts[1], parts[2]));
    }
}

TEST_CASE("random 3-partition never counts more than the whole graph") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = erdos_renyi(20, 0.4, rng);
        const auto total = count_triangles_brute(g).t;
        auto parts = random_tripartition(20, rng);
        CHECK(count_triangles_tripartite_brute(g, parts[0], parts[1], parts[2]) <= total);
    }
}

TEST_CASE("book family plants the advertised counts") {
    auto g = planted_book(20, 3, 2);
    auto stats = count_triangles_brute(g);
    CHECK(stats.t == 6);
    CHECK(stats.delta_e == 3);
    CHECK(g.m() == 14);

    // the spine edge carries exactly d triangles, so delta_e is pinned
    for (std::uint32_t d : {1u, 2u, 5u}) {
        for (std::uint32_t gadgets : {1u, 3u}) {
            auto b = planted_book(64, d, gadgets);
            auto s = count_triangles_brute(b);
            CHECK(s.t == std::uint64_t{d} * gadgets);
            CHECK(s.delta_e == d);
        }
    }

    CHECK_THROWS_AS(planted_book(10, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(planted_book(10, 0, 1), std::invalid_argument);
}

TEST_CASE("unit-distance family") {
    SUBCASE("equilateral triangle") {
        const double h = std::sqrt(3.0) / 2.0;
        auto g = unit_distance({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}});
        auto stats = count_triangles_brute(g);
        CHECK(g.m() == 3);
        CHECK(stats.t == 1);
        CHECK(stats.delta_e <= 2);
    }
    SUBCASE("triangular lattice stays within two triangles per edge") {
        auto g = unit_distance(triangular_lattice_points(5, 6));
        auto stats = count_triangles_brute(g);
        CHECK(stats.t > 0);
        CHECK(stats.delta_e == 2);
    }
    SUBCASE("distance off by more than the tolerance is no edge") {
        auto g = unit_distance({{0.0, 0.0}, {1.0 + 1e-6, 0.0}});
        CHECK(g.m() == 0);
        auto g2 = unit_distance({{0.0, 0.0}, {1.0 + 1e-12, 0.0}});
        CHECK(g2.m() == 1);
    }
}

TEST_CASE("erdos-renyi endpoints and determinism") {
    Rng rng(5);
    CHECK(erdos_renyi(10, 0.0, rng).m() == 0);
    CHECK(erdos_renyi(10, 1.0, rng).m() == 45);
    CHECK(count_triangles_brute(erdos_renyi(12, 0.0, rng)).t == 0);

    Rng r1(42), r2(42);
    auto a = erdos_renyi(30, 0.4, r1);
    auto b = erdos_renyi(30, 0.4, r2);
    CHECK(a.edges() == b.edges());

    CHECK_THROWS_AS(erdos_renyi(5, 1.5, rng), std::invalid_argument);
}

TEST_CASE("clique union") {
    auto g = clique_union(20, 4, 3);
    auto stats = count_triangles_brute(g);
    CHECK(g.m() == 18);
    CHECK(stats.t == 12);
    CHECK(stats.delta_e == 2);
    CHECK_THROWS_AS(clique_union(10, 4, 3), std::invalid_argument);
}

TEST_CASE("triangle packing hits the target exactly or reports failure") {
    Rng rng(1234);
    auto g = triangle_packing(24, 2, 20, rng);
    auto stats = count_triangles_brute(g);
    CHECK(stats.t == 20);
    CHECK(stats.delta_e <= 2);

    Rng rng2(1);
    // only one edge-disjoint triangle fits on four vertices
    CHECK_THROWS_AS(triangle_packing(4, 1, 5, rng2), std::invalid_argument);
    CHECK_THROWS_AS(triangle_packing(2, 1, 1, rng2), std::invalid_argument);
    CHECK_THROWS_AS(triangle_packing(9, 0, 1, rng2), std::invalid_argument);
}

TEST_CASE("generator dispatch is seed-deterministic") {
    GeneratorSpec spec;
    spec.family = Family::ErdosRenyi;
    spec.n = 40;
    spec.p = 0.3;
    auto a = generate(spec, 11);
    auto b = generate(spec, 11);
    auto c = generate(spec, 12);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());

    spec.family = Family::PlantedBook;
    spec.n = 30;
    spec.d = 2;
    spec.gadgets = 5;
    auto book = generate(spec, 0);
    CHECK(count_triangles_brute(book).t == 10);
}

TEST_CASE("edge-list documents") {
    SUBCASE("tiny fixed document") {
        std::istringstream in("3\n0 1\n1 2\n0 2\n");
        auto g = load_edge_list(in);
        CHECK(g.n() == 3);
        CHECK(g.m() == 3);
        CHECK(count_triangles_brute(g).t == 1);
    }
    SUBCASE("save/load round trip") {
        auto g = complete_graph(4);
        std::stringstream buf;
        save_edge_list(g, buf);
        auto back = load_edge_list(buf);
        CHECK(back.n() == g.n());
        CHECK(back.edges() == g.edges());
    }
    SUBCASE("file round trip") {
        const std::string path = "tiq_test_roundtrip.edges";
        auto g = planted_book(12, 2, 3);
        save_edge_list_file(g, path);
        auto back = load_edge_list_file(path);
        CHECK(back.edges() == g.edges());
        std::remove(path.c_str());
    }
    SUBCASE("parse errors carry line numbers") {
        auto expect_error_on_line = [](const std::string& doc, std::size_t line) {
            std::istringstream in(doc);
            try {
                load_edge_list(in);
                FAIL("expected a parse error for: " << doc);
            } catch (const ParseError& e) {
                CHECK(e.line() == line);
            }
        };
        expect_error_on_line("3\n0 0\n", 2);
        expect_error_on_line("3\n0 1\n0 3\n", 3);
        expect_error_on_line("3\n0 1\n1 0\n", 3);
        expect_error_on_line("3\n0 x\n", 2);
        expect_error_on_line("3\n0 1 2\n", 2);
        expect_error_on_line("", 1);
        expect_error_on_line("abc\n", 1);
        std::istringstream missing("");
        CHECK_THROWS_AS(load_edge_list(missing), ParseError);
    }
}
