#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tiq/coarse.hpp"
#include "tiq/graph.hpp"
#include "tiq/mathutil.hpp"
#include "tiq/oracle.hpp"
#include "tiq/rng.hpp"

using namespace tiq;

namespace {

// Complete tripartite block K_{sa,sb,sc} living on the first vertices of a
// larger vertex universe; the remainder stays isolated.
struct PaddedBlock {
    Graph g;
    VertexSet a, b, c;
    std::uint64_t t;
};

PaddedBlock padded_block(std::uint32_t n, std::uint32_t sa, std::uint32_t sb,
                         std::uint32_t sc) {
    auto core = complete_tripartite(sa, sb, sc);
    PaddedBlock out{Graph(n, core.edges()), {}, {}, {},
                    std::uint64_t{sa} * sb * sc};
    for (Vertex v = 0; v < sa; ++v) out.a.push_back(v);
    for (Vertex v = sa; v < sa + sb; ++v) out.b.push_back(v);
    for (Vertex v = sa + sb; v < sa + sb + sc; ++v) out.c.push_back(v);
    return out;
}

std::uint64_t levels_of(const TisOracle& o) {
    return std::max<std::uint64_t>(ceil_log2(o.n()), 1);
}

} // namespace

TEST_CASE("probes reject guesses below one") {
    auto blk = padded_block(16, 2, 2, 2);
    TisOracle o(blk.g);
    Rng rng(1);
    CHECK_THROWS_AS(verify_probe(o, blk.a, blk.b, blk.c, 0, 0, 0.5, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_estimate(o, blk.a, blk.b, blk.c, 0.0, rng),
                    std::invalid_argument);
}

TEST_CASE("verification never accepts a triangle-free tuple") {
    Graph g(64, {});
    TisOracle o(g);
    Rng rng(2);
    VertexSet a, b, c;
    for (Vertex v = 0; v < 20; ++v) a.push_back(v);
    for (Vertex v = 20; v < 40; ++v) b.push_back(v);
    for (Vertex v = 40; v < 64; ++v) c.push_back(v);
    for (int trial = 0; trial < 50; ++trial)
        CHECK_FALSE(verify_estimate(o, a, b, c, 64.0, rng));
}

TEST_CASE("one verification pass stays within its probe budget") {
    auto blk = padded_block(64, 4, 5, 5);
    TisOracle o(blk.g);
    Rng rng(3);
    const std::uint64_t levels = levels_of(o);
    const std::uint64_t budget = (2 * levels + 1) * (levels + 1);
    for (int trial = 0; trial < 30; ++trial) {
        o.reset_ledger();
        verify_estimate(o, blk.a, blk.b, blk.c, 100.0, rng);
        CHECK(o.ledger().total <= budget);
        CHECK(o.ledger().per_phase[static_cast<std::size_t>(Phase::Coarse)] ==
              o.ledger().total);
    }
}

TEST_CASE("per-probe hit rate stays under the expectation bound") {
    auto blk = padded_block(64, 4, 5, 5); // 100 cross triangles
    TisOracle o(blk.g);
    Rng rng(20240521);
    const double levels = static_cast<double>(levels_of(o));

    for (double t_hat : {2400.0, 9600.0}) {
        const double bound =
            static_cast<double>(blk.t) * levels / t_hat;
        for (std::uint32_t i : {0u, 6u, 12u}) {
            for (std::uint32_t j : {0u, 3u, 6u}) {
                const int trials = 3000;
                int hits = 0;
                for (int trial = 0; trial < trials; ++trial)
                    hits += verify_probe(o, blk.a, blk.b, blk.c, i, j, t_hat, rng);
                const double rate = static_cast<double>(hits) / trials;
                const double slack =
                    3.0 * std::sqrt(bound * (1.0 - std::min(bound, 0.99)) / trials);
                CHECK(rate <= bound + slack + 1e-9);
            }
        }
    }
}

TEST_CASE("coarse estimation brackets planted counts") {
    Rng rng(99);
    CoarseParams params; // gamma = 200
    struct Case {
        std::uint32_t sa, sb, sc;
    };
    for (const auto& tc : {Case{4, 5, 5}, Case{22, 21, 21}}) {
        auto blk = padded_block(64, tc.sa, tc.sb, tc.sc);
        TisOracle o(blk.g);
        const double levels = static_cast<double>(levels_of(o));
        const double factor = 64.0 * levels * levels;
        const double t = static_cast<double>(blk.t);

        int inside = 0;
        const int runs = 200;
        for (int run = 0; run < runs; ++run) {
            auto res = coarse_estimate(o, blk.a, blk.b, blk.c, params, rng);
            if (!res.has_value()) continue;
            CHECK(res->t_tilde ==
                  doctest::Approx(res->accepted_at / levels));
            CHECK(res->bracket == doctest::Approx(factor));
            if (res->t_tilde >= t / factor && res->t_tilde <= t * factor) ++inside;
        }
        CHECK(inside >= 198);
    }
}

TEST_CASE("coarse estimation respects the worst-case query budget") {
    auto blk = padded_block(64, 4, 5, 5);
    TisOracle o(blk.g);
    Rng rng(5);
    CoarseParams params;
    const std::uint64_t levels = levels_of(o);
    const std::uint64_t budget =
        (3 * levels + 1) * params.gamma * (2 * levels + 1) * (levels + 1);
    for (int run = 0; run < 20; ++run) {
        o.reset_ledger();
        auto res = coarse_estimate(o, blk.a, blk.b, blk.c, params, rng);
        CHECK(res.has_value());
        CHECK(o.ledger().total <= budget);
    }
}

TEST_CASE("grid exhaustion on a triangle-free tuple reports no estimate") {
    Graph g(32, {});
    TisOracle o(g);
    Rng rng(8);
    VertexSet a{0, 1, 2}, b{3, 4, 5}, c{6, 7, 8};
    CoarseParams params;
    auto res = coarse_estimate(o, a, b, c, params, rng);
    CHECK_FALSE(res.has_value());
    const std::uint64_t levels = levels_of(o);
    CHECK(o.ledger().total <=
          (3 * levels + 1) * params.gamma * (2 * levels + 1) * (levels + 1));

    CoarseParams zero;
    zero.gamma = 0;
    CHECK_THROWS_AS(coarse_estimate(o, a, b, c, zero, rng), std::invalid_argument);
}

TEST_CASE("coarse estimation is seed-deterministic") {
    auto blk = padded_block(64, 22, 21, 21);
    TisOracle o(blk.g);
    CoarseParams params;
    Rng r1(77), r2(77);
    auto x = coarse_estimate(o, blk.a, blk.b, blk.c, params, r1);
    auto y = coarse_estimate(o, blk.a, blk.b, blk.c, params, r2);
    REQUIRE(x.has_value());
    REQUIRE(y.has_value());
    CHECK(x->t_tilde == y->t_tilde);
    CHECK(x->accepted_at == y->accepted_at);
}
