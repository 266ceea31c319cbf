#include "dsrg/text_io.hpp"

#include "dsrg/brute_force.hpp"
#include "dsrg/graph_ops.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

using namespace dsrg;

namespace {

const std::string kTriangleText = "3 1 0 0 1\n010\n001\n100\n";

const std::string kKautzOmText =
    "6 2 1 0 1\n"
    "3 2 R\n"
    "3 3\n"
    "1 1\n"
    "1 1\n";

void check_config_equal(const GaConfig& a, const GaConfig& b) {
    CHECK(a.pop_size == b.pop_size);
    CHECK(a.max_generations == b.max_generations);
    CHECK(a.mutation_probability == b.mutation_probability);
    CHECK(a.crossover_probability == b.crossover_probability);
    CHECK(a.genes_per_crossover == b.genes_per_crossover);
    CHECK(a.bits_per_mutation == b.bits_per_mutation);
    CHECK(a.stagnation_threshold == b.stagnation_threshold);
    CHECK(a.max_partial_resets == b.max_partial_resets);
    CHECK(a.max_complete_resets == b.max_complete_resets);
    CHECK(a.starting_percentage == b.starting_percentage);
    CHECK(a.rng_seed == b.rng_seed);
    CHECK(a.wall_clock_budget == b.wall_clock_budget);
    CHECK(a.stop_on_first == b.stop_on_first);
}

}  // namespace

TEST_CASE("graph text parsing") {
    SUBCASE("plain file round-trips byte-for-byte") {
        const GraphFile gf = parse_graph_text(kTriangleText);
        CHECK(gf.params == Params{3, 1, 0, 0, 1});
        CHECK(gf.matrix(0, 1) == 1);
        CHECK(gf.matrix(1, 2) == 1);
        CHECK(gf.matrix(2, 0) == 1);
        CHECK(gf.matrix.sum() == 3);
        CHECK(serialize_graph_text(gf.params, gf.matrix) == kTriangleText);
    }

    SUBCASE("comments and blank lines are tolerated around the payload") {
        const GraphFile gf = parse_graph_text("# a comment\n\n  # indented\n" + kTriangleText +
                                              "\n# trailing\n");
        CHECK(gf == parse_graph_text(kTriangleText));
    }

    SUBCASE("windows line endings are accepted") {
        const GraphFile gf = parse_graph_text("3 1 0 0 1\r\n010\r\n001\r\n100\r\n");
        CHECK(gf == parse_graph_text(kTriangleText));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_graph_text(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("# only a comment\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("3 1 0 0\n010\n001\n100\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("3 1 0 0 1 9\n010\n001\n100\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("0 0 0 0 0\n"), std::invalid_argument);
        // wrong row length, bad character, missing row, trailing junk
        CHECK_THROWS_AS(parse_graph_text("3 1 0 0 1\n0100\n001\n100\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("3 1 0 0 1\n010\n0x1\n100\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text("3 1 0 0 1\n010\n001\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_graph_text(kTriangleText + "extra\n"), std::invalid_argument);
    }

    SUBCASE("serialize checks dimensions") {
        CHECK_THROWS_AS(serialize_graph_text(Params{3, 1, 0, 0, 1}, Matrix::Zero(4, 4)),
                        std::invalid_argument);
    }
}

TEST_CASE("orbit matrix text parsing") {
    SUBCASE("row variant round-trips") {
        const OrbitMatrixFile file = parse_orbit_matrix_text(kKautzOmText);
        CHECK(file.kind == 'R');
        CHECK(file.matrix.params == Params{6, 2, 1, 0, 1});
        CHECK(file.matrix.prime == 3);
        CHECK(file.matrix.lengths == std::vector<std::int64_t>{3, 3});
        CHECK(file.matrix.entries(0, 0) == 1);
        CHECK(file.matrix.entries.sum() == 4);
        CHECK(serialize_orbit_matrix_text(file.matrix, file.kind) == kKautzOmText);
    }

    SUBCASE("column tag and interleaved comments") {
        const std::string text =
            "# header comment\n"
            "6 2 1 0 1\n"
            "3 2 C\n"
            "# lengths next\n"
            "3 3\n"
            "1 1\n"
            "\n"
            "1 1\n";
        const OrbitMatrixFile file = parse_orbit_matrix_text(text);
        CHECK(file.kind == 'C');
        CHECK(file.matrix == parse_orbit_matrix_text(kKautzOmText).matrix);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_orbit_matrix_text(""), std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n"), std::invalid_argument);
        // bad head line: wrong tag, missing field, non-positive counts
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 X\n3 3\n1 1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 R\n3 3\n1 1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 0 R\n\n"), std::invalid_argument);
        // lengths line too short, non-positive, or too long
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3\n1 1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 0\n1 1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 3 3\n1 1\n1 1\n"),
                        std::invalid_argument);
        // entry rows: wrong count, short row, long row
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 3\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 3\n1 1\n1 1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 3\n1\n1 1\n"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_orbit_matrix_text("6 2 1 0 1\n3 2 R\n3 3\n1 1 1\n1 1\n"),
                        std::invalid_argument);
    }

    SUBCASE("serialize validates its inputs") {
        const OrbitMatrix m = parse_orbit_matrix_text(kKautzOmText).matrix;
        CHECK_THROWS_AS(serialize_orbit_matrix_text(m, 'X'), std::invalid_argument);
        OrbitMatrix broken = m;
        broken.lengths.push_back(1);
        CHECK_THROWS_AS(serialize_orbit_matrix_text(broken, 'R'), std::invalid_argument);
    }
}

TEST_CASE("manifest json parsing") {
    SUBCASE("minimal manifest uses GaConfig defaults and an entropy seed") {
        const RunManifest m = parse_manifest_json(R"({"orbit_matrix": "foo.om"})");
        CHECK(m.orbit_matrix_path == "foo.om");
        CHECK(m.orbit_matrix_inline.empty());
        CHECK(m.generator.empty());
        CHECK_FALSE(m.seed_provided);
        CHECK(m.output_dir.empty());
        CHECK(m.parallel_runs == 1);
        check_config_equal(m.config, GaConfig{});
    }

    SUBCASE("percent fields become fractions") {
        const RunManifest m = parse_manifest_json(R"({
            "orbit_matrix": "foo.om",
            "POP": 20,
            "MaxNrOfGenerations": 500,
            "p_m": 100.0,
            "p_c": 80.0,
            "NrGenesForCrossover": 2,
            "NrBitsForMutation": 3,
            "FitnessForDSRGNrOfRepeatsMax": 40,
            "MaxNrOfPartialResets": 5,
            "MaxNrOfCompleteResets": 2,
            "StartingPercentage": 10.0,
            "seed": 42,
            "WallClockBudget": 1.5,
            "StopOnFirst": true,
            "output_dir": "out",
            "parallel_runs": 3
        })");
        CHECK(m.config.pop_size == 20);
        CHECK(m.config.max_generations == 500);
        CHECK(m.config.mutation_probability == 1.0);
        CHECK(m.config.crossover_probability == doctest::Approx(0.80));
        CHECK(m.config.genes_per_crossover == 2);
        CHECK(m.config.bits_per_mutation == 3);
        CHECK(m.config.stagnation_threshold == 40);
        CHECK(m.config.max_partial_resets == 5);
        CHECK(m.config.max_complete_resets == 2);
        CHECK(m.config.starting_percentage == doctest::Approx(0.10));
        CHECK(m.seed_provided);
        CHECK(m.config.rng_seed == 42);
        CHECK(m.config.wall_clock_budget == 1.5);
        CHECK(m.config.stop_on_first);
        CHECK(m.output_dir == "out");
        CHECK(m.parallel_runs == 3);
    }

    SUBCASE("inline orbit matrix is joined with newlines") {
        const RunManifest m = parse_manifest_json(R"({
            "orbit_matrix_inline": ["3 1 0 0 1", "3 1 R", "3", "1"]
        })");
        CHECK(m.orbit_matrix_path.empty());
        CHECK(m.orbit_matrix_inline == "3 1 0 0 1\n3 1 R\n3\n1\n");
        CHECK(parse_orbit_matrix_text(m.orbit_matrix_inline).matrix.prime == 3);
    }

    SUBCASE("exactly one source of the orbit matrix") {
        CHECK_THROWS_AS(parse_manifest_json("{}"), std::invalid_argument);
        CHECK_THROWS_AS(parse_manifest_json(
                            R"({"orbit_matrix": "a.om", "orbit_matrix_inline": ["x"]})"),
                        std::invalid_argument);
    }

    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_manifest_json("not json"), std::invalid_argument);
        CHECK_THROWS_AS(parse_manifest_json(R"({"orbit_matrix": "a.om", "parallel_runs": 0})"),
                        std::invalid_argument);
    }

    SUBCASE("unknown keys are ignored") {
        const RunManifest m =
            parse_manifest_json(R"({"orbit_matrix": "a.om", "comment": "anything"})");
        CHECK(m.orbit_matrix_path == "a.om");
    }

    SUBCASE("serialize/parse round-trip") {
        RunManifest m;
        m.orbit_matrix_inline = kKautzOmText;
        m.generator = "(0 3 4)(1 2 5)";
        m.config.pop_size = 24;
        m.config.max_generations = 77;
        m.config.mutation_probability = 0.5;
        m.config.crossover_probability = 0.25;
        m.config.genes_per_crossover = 2;
        m.config.bits_per_mutation = 4;
        m.config.stagnation_threshold = 9;
        m.config.max_partial_resets = 3;
        m.config.max_complete_resets = 2;
        m.config.starting_percentage = 0.125;
        m.config.rng_seed = 1234567;
        m.config.wall_clock_budget = 2.5;
        m.config.stop_on_first = true;
        m.seed_provided = true;
        m.output_dir = "results";
        m.parallel_runs = 4;

        const RunManifest back = parse_manifest_json(serialize_manifest_json(m));
        CHECK(back.orbit_matrix_path == m.orbit_matrix_path);
        CHECK(back.orbit_matrix_inline == m.orbit_matrix_inline);
        CHECK(back.generator == m.generator);
        CHECK(back.seed_provided == m.seed_provided);
        CHECK(back.output_dir == m.output_dir);
        CHECK(back.parallel_runs == m.parallel_runs);
        check_config_equal(back.config, m.config);

        // Optional keys stay out of the file when they carry no information.
        RunManifest plain;
        plain.orbit_matrix_path = "a.om";
        plain.seed_provided = false;
        const std::string text = serialize_manifest_json(plain);
        CHECK(text.find("seed") == std::string::npos);
        CHECK(text.find("WallClockBudget") == std::string::npos);
        CHECK(text.find("StopOnFirst") == std::string::npos);
        CHECK(text.find("output_dir") == std::string::npos);
        CHECK(text.find("generator") == std::string::npos);
    }
}

TEST_CASE("outcome json") {
    SearchOutcome o;
    o.params = Params{3, 1, 0, 0, 1};
    o.seed = 9;
    o.max_fitness = 3;
    o.generations_total = 2;
    o.budget_exhausted = false;
    o.warnings = {"population contains duplicates"};
    o.runs.push_back({0, 1, 2, 3, "solution"});
    SolutionRecord sol;
    sol.matrix = parse_graph_text(kTriangleText).matrix;
    sol.generation = 2;
    sol.partial_run = 1;
    sol.complete_run = 0;
    o.solutions.push_back(sol);
    o.trajectory = {1, 3};
    o.elapsed_seconds = 123.0;

    const std::string text = outcome_to_json(o);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("params") == nlohmann::json({3, 1, 0, 0, 1}));
    CHECK(j.at("seed") == 9);
    CHECK(j.at("max_fitness") == 3);
    CHECK(j.at("generations_total") == 2);
    CHECK(j.at("budget_exhausted") == false);
    CHECK(j.at("warnings").size() == 1);
    CHECK(j.at("runs").at(0).at("exit") == "solution");
    CHECK(j.at("runs").at(0).at("f_best") == 3);
    CHECK(j.at("solutions").at(0).at("rows") ==
          nlohmann::json({"010", "001", "100"}));
    CHECK(j.at("solutions").at(0).at("generation") == 2);
    CHECK(j.at("trajectory") == nlohmann::json({1, 3}));
    CHECK_FALSE(j.contains("elapsed_seconds"));

    // Wall time never leaks into the serialization.
    SearchOutcome o2 = o;
    o2.elapsed_seconds = 0.5;
    CHECK(outcome_to_json(o2) == text);
}

TEST_CASE("catalog text round-trip") {
    const Params params{3, 1, 0, 0, 1};
    const Catalog catalog =
        dedup_and_classify(brute_force_enumerate(params), params,
                           {{"tri.om", 5, 2}, {"tri.om", 5, 7}});

    const std::string text = catalog_to_text(catalog);
    CHECK(text.rfind("3 1 0 0 1\nclasses 1\naut 3\nom tri.om\nseed 5\ngeneration 2\n", 0) == 0);
    CHECK(catalog_from_text(text) == catalog);

    SUBCASE("empty provenance uses the dash placeholder") {
        const Catalog bare = dedup_and_classify(brute_force_enumerate(params), params);
        const std::string t = catalog_to_text(bare);
        CHECK(t.find("om -\n") != std::string::npos);
        CHECK(catalog_from_text(t) == bare);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(catalog_from_text(""), std::invalid_argument);
        CHECK_THROWS_AS(catalog_from_text(text + "junk\n"), std::invalid_argument);
        CHECK_THROWS_AS(catalog_from_text("3 1 0 0 1\nclasses 1\n"), std::invalid_argument);
        // missing a keyed line
        std::string broken = text;
        broken.replace(broken.find("aut "), 4, "AUT ");
        CHECK_THROWS_AS(catalog_from_text(broken), std::invalid_argument);
    }
}

TEST_CASE("text file io") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "dsrg_text_io_test.txt";
    write_text_file(path.string(), "line one\nline two\n");
    CHECK(read_text_file(path.string()) == "line one\nline two\n");
    std::remove(path.string().c_str());

    CHECK_THROWS_AS(read_text_file((fs::temp_directory_path() / "missing-dsrg").string()),
                    std::runtime_error);
    CHECK_THROWS_AS(write_text_file((fs::temp_directory_path() / "no-such-dir" / "f").string(),
                                    "x"),
                    std::runtime_error);
}
