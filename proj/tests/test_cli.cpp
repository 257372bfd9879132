#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path scratch = fs::temp_directory_path() / "tiq_cli_scratch";

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + TIQ_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

} // namespace

TEST_CASE("generate and brute round-trip") {
    fs::create_directories(scratch);
    const auto edges = scratch / "cliques.edges";
    const auto gen_doc = scratch / "gen.json";
    REQUIRE(run_cli("generate --family cliques --n 20 --clique-size 4 "
                    "--cliques 5 --seed 7 --edge-out " +
                    q(edges) + " --out " + q(gen_doc)) == 0);

    const json gen = load(gen_doc);
    CHECK(gen["schema"] == "tiq-generate/1");
    CHECK(gen["family"] == "cliques");
    CHECK(gen["seed"] == 7);
    CHECK(gen["graph"]["n"] == 20);
    CHECK(gen["graph"]["edges"] == 30);
    CHECK(gen["graph"]["t_brute"] == 20); // five K4 blocks, four triangles each
    CHECK(gen["graph"]["delta_e"] == 2);

    const auto brute_doc = scratch / "brute.json";
    REQUIRE(run_cli("brute " + q(edges) + " --out " + q(brute_doc)) == 0);
    const json brute = load(brute_doc);
    CHECK(brute["schema"] == "tiq-brute/1");
    CHECK(brute["graph"] == gen["graph"]);
}

TEST_CASE("estimate emits the run-report document") {
    fs::create_directories(scratch);
    const auto edges = scratch / "book.edges";
    REQUIRE(run_cli("generate --family book --n 48 --d 1 --seed 2 --edge-out " +
                    q(edges)) == 0);

    const auto doc_path = scratch / "run.json";
    REQUIRE(run_cli("estimate " + q(edges) +
                    " --eps 0.2 --d 1 --seed 5 --out " + q(doc_path)) == 0);
    const json doc = load(doc_path);
    CHECK(doc["schema"] == "tiq-run-report/1");
    CHECK(doc["seed"] == 5);
    CHECK(doc["graph"]["t_brute"] == 16); // default gadget fill: 48 / (d + 2)
    CHECK(doc["config"]["preset"] == "practical");
    CHECK(doc["derived"]["tau"] == 300);
    CHECK(doc["derived"]["levels"] == 6);
    CHECK(doc["estimate"]["mode"] == "threshold");
    CHECK(doc["estimate"]["failed"] == false);
    CHECK(doc["estimate"]["within_budget"] == true);
    CHECK(doc["estimate"]["t_hat"].is_number());
    CHECK(doc["estimate"]["relative_error"].is_number());
    CHECK(doc["queries"]["total"].get<std::uint64_t>() > 0);
    CHECK(doc["queries"].contains("threshold-estimate"));
    CHECK_FALSE(doc.contains("wall_time_s"));
}

TEST_CASE("same seed gives byte-identical reports") {
    fs::create_directories(scratch);
    const auto edges = scratch / "book.edges";
    REQUIRE(run_cli("generate --family book --n 48 --d 1 --seed 2 --edge-out " +
                    q(edges)) == 0);
    const auto a = scratch / "a.json";
    const auto b = scratch / "b.json";
    REQUIRE(run_cli("estimate " + q(edges) + " --seed 31 --out " + q(a)) == 0);
    REQUIRE(run_cli("estimate " + q(edges) + " --seed 31 --out " + q(b)) == 0);
    CHECK(slurp(a) == slurp(b));

    const auto timed = scratch / "timed.json";
    REQUIRE(run_cli("estimate " + q(edges) + " --seed 31 --timings --out " +
                    q(timed)) == 0);
    CHECK(load(timed).contains("wall_time_s"));
}

TEST_CASE("seed falls back to the RNG_SEED environment") {
    fs::create_directories(scratch);
    const auto edges = scratch / "book.edges";
    REQUIRE(run_cli("generate --family book --n 48 --d 1 --seed 2 --edge-out " +
                    q(edges)) == 0);
    const auto doc_path = scratch / "env.json";
    const std::string cmd = "RNG_SEED=42 \"" + std::string(TIQ_CLI_PATH) +
                            "\" estimate " + q(edges) + " --out " + q(doc_path) +
                            " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(rc));
    REQUIRE(WEXITSTATUS(rc) == 0);
    CHECK(load(doc_path)["seed"] == 42);
}

TEST_CASE("sweep aggregates seeded runs") {
    fs::create_directories(scratch);
    const auto edges = scratch / "book.edges";
    REQUIRE(run_cli("generate --family book --n 48 --d 1 --seed 2 --edge-out " +
                    q(edges)) == 0);
    const auto doc_path = scratch / "sweep.json";
    REQUIRE(run_cli("sweep " + q(edges) +
                    " --eps 0.5 --d 1 --seed 100 -R 5 --out " +
                    q(doc_path)) == 0);
    const json doc = load(doc_path);
    CHECK(doc["schema"] == "tiq-sweep/1");
    CHECK(doc["runs"] == 5);
    CHECK(doc["base_seed"] == 100);
    CHECK(doc["failures"] == 0);
    const double frac = doc["success_fraction"].get<double>();
    CHECK(frac >= 0.0);
    CHECK(frac <= 1.0);
    CHECK(doc["mean_relative_error"].get<double>() >= 0.0);
}

TEST_CASE("bench sweeps sizes against the query curve") {
    fs::create_directories(scratch);
    const auto doc_path = scratch / "bench.json";
    REQUIRE(run_cli("bench --family book --sizes 16,32 --eps 0.4 --d 1 "
                    "--seed 3 --out " +
                    q(doc_path)) == 0);
    const json doc = load(doc_path);
    CHECK(doc["schema"] == "tiq-bench/1");
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["n"] == 16);
    CHECK(doc["rows"][1]["n"] == 32);
    for (const auto& row : doc["rows"]) {
        CHECK(row["failed"] == false);
        CHECK(row["queries_total"].get<std::uint64_t>() > 0);
        CHECK(row["queries_over_curve"].get<double>() > 0.0);
        CHECK(row["t_brute"].get<std::uint64_t>() > 0);
    }
}

TEST_CASE("failure exits are nonzero") {
    fs::create_directories(scratch);
    CHECK(run_cli("estimate " + q(scratch / "no_such_file.edges")) == 1);
    CHECK(run_cli("generate --family nonsense --edge-out " +
                  q(scratch / "x.edges")) == 1);
    CHECK(run_cli("generate --n 16") == 1); // --edge-out is required
    CHECK(run_cli("") == 1);                // a subcommand is required

    const auto bad = scratch / "bad.edges";
    std::ofstream(bad) << "3\n0 0\n";
    CHECK(run_cli("brute " + q(bad)) == 1);

    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("estimate --help") == 0);
}
