#include "dsrg/automorphism.hpp"
#include "dsrg/canonical.hpp"
#include "dsrg/catalog.hpp"
#include "dsrg/graph_ops.hpp"
#include "dsrg/orbit_matrix.hpp"
#include "dsrg/search_driver.hpp"
#include "dsrg/text_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace dsrg;

namespace fs = std::filesystem;

// Precedence: explicit flag, then manifest field, then DSRG_OUTPUT_DIR, then
// the current directory.
std::string resolve_output_dir(const std::string& flag_value, const std::string& manifest_value) {
    if (!flag_value.empty()) return flag_value;
    if (!manifest_value.empty()) return manifest_value;
    if (const char* env = std::getenv("DSRG_OUTPUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

std::string join_dir(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int cmd_check(const std::vector<std::int64_t>& values) {
    Params p{values[0], values[1], values[2], values[3], values[4]};
    const std::int64_t lhs = p.k * p.k;
    const std::int64_t rhs = p.t + p.lambda * p.k + p.mu * (p.v - p.k - 1);
    std::cout << lhs << (lhs == rhs ? " = " : " != ") << rhs << "\n";
    if (check_feasibility(p)) {
        std::cout << "pass: DSRG(" << format_params(p) << ") is feasible\n";
        return 0;
    }
    std::cout << "fail: DSRG(" << format_params(p) << ") is infeasible\n";
    return 1;
}

int cmd_verify(const std::string& path) {
    const GraphFile gf = parse_graph_text(read_text_file(path));
    const VerifyReport report = verify_dsrg_report(gf.matrix, gf.params);
    if (report.ok) {
        std::cout << "verified DSRG(" << format_params(gf.params) << ")\n";
        return 0;
    }
    std::cout << "not a DSRG(" << format_params(gf.params) << "): " << report.reason << "\n";
    return 1;
}

int cmd_fitness(const std::string& path) {
    const GraphFile gf = parse_graph_text(read_text_file(path));
    const std::int64_t f = fitness(gf.matrix, gf.params);
    const std::int64_t fmax = max_fitness(gf.params);
    std::cout << "fitness " << f << "\n";
    std::cout << "max " << fmax << "\n";
    std::cout << "deficit " << (fmax - f) << "\n";
    return 0;
}

int cmd_canon(const std::string& path) {
    const GraphFile gf = parse_graph_text(read_text_file(path));
    const CanonicalForm form = canonical_form(gf.matrix);
    std::cout << serialize_graph_text(gf.params, form.matrix(gf.matrix.rows()));
    std::cout << "aut " << form.aut_order << "\n";
    return 0;
}

int cmd_validate_om(const std::string& path) {
    const OrbitMatrixFile file = parse_orbit_matrix_text(read_text_file(path));
    const ValidationReport report = file.kind == 'R' ? validate_row_orbit_matrix(file.matrix)
                                                     : validate_column_orbit_matrix(file.matrix);
    if (report.ok) {
        std::cout << "valid " << (file.kind == 'R' ? "row" : "column")
                  << " orbit matrix for DSRG(" << format_params(file.matrix.params) << ")\n";
        return 0;
    }
    std::cout << "invalid: " << report.violation << "\n";
    return 1;
}

int cmd_derive(const std::string& path, std::int64_t prime, const std::string& out_flag) {
    const GraphFile gf = parse_graph_text(read_text_file(path));
    const VerifyReport report = verify_dsrg_report(gf.matrix, gf.params);
    if (!report.ok) {
        throw std::invalid_argument("graph fails verification: " + report.reason);
    }
    const std::vector<Permutation> autos = find_prime_order_automorphisms(gf.matrix, prime);

    // Distinct orbit matrices, with the automorphisms that produced each.
    std::vector<RowOrbitMatrix> matrices;
    std::vector<std::vector<const Permutation*>> sources;
    for (const Permutation& g : autos) {
        const RowOrbitMatrix r = derive_row_orbit_matrix(gf.matrix, orbits_of(g), gf.params);
        bool found = false;
        for (std::size_t i = 0; i < matrices.size(); ++i) {
            if (matrices[i] == r) {
                sources[i].push_back(&g);
                found = true;
                break;
            }
        }
        if (!found) {
            matrices.push_back(r);
            sources.push_back({&g});
        }
    }

    const std::string dir = resolve_output_dir(out_flag, "");
    fs::create_directories(dir);
    const std::string stem = fs::path(path).stem().string();
    const std::string tag = stem + "-p" + std::to_string(prime);

    std::string index = "matrices " + std::to_string(matrices.size()) + "\n";
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const std::string name = tag + "-om" + std::to_string(i + 1) + ".om";
        write_text_file(join_dir(dir, name), serialize_orbit_matrix_text(matrices[i], 'R'));
        index += name + " " + std::to_string(sources[i].size()) + " " +
                 sources[i].front()->to_cycle_string() + "\n";
    }
    write_text_file(join_dir(dir, tag + ".index"), index);
    std::cout << "automorphisms of order " << prime << ": " << autos.size() << "\n";
    std::cout << "distinct orbit matrices: " << matrices.size() << "\n";
    std::cout << "index: " << join_dir(dir, tag + ".index") << "\n";
    return 0;
}

struct SearchFlags {
    std::string manifest_path;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int parallel = 0;
    std::int64_t pop = 0;
    std::int64_t max_generations = 0;
    double budget = -1.0;
    bool stop_on_first = false;
};

int cmd_search(const SearchFlags& flags) {
    RunManifest manifest = parse_manifest_json(read_text_file(flags.manifest_path));
    if (flags.seed_set) {
        manifest.config.rng_seed = flags.seed;
        manifest.seed_provided = true;
    }
    if (flags.parallel > 0) manifest.parallel_runs = flags.parallel;
    if (flags.pop > 0) manifest.config.pop_size = flags.pop;
    if (flags.max_generations > 0) manifest.config.max_generations = flags.max_generations;
    if (flags.budget >= 0.0) manifest.config.wall_clock_budget = flags.budget;
    if (flags.stop_on_first) manifest.config.stop_on_first = true;
    if (!manifest.seed_provided) {
        std::random_device rd;
        manifest.config.rng_seed =
            (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
        std::cout << "seed " << manifest.config.rng_seed << " (drawn from entropy)\n";
    }

    const std::string base_dir = fs::path(flags.manifest_path).parent_path().string();
    SearchRequest request = resolve_manifest(manifest, base_dir);
    if (const ValidationReport vr = validate_row_orbit_matrix(request.row_matrix); !vr.ok) {
        std::cout << "invalid orbit matrix: " << vr.violation << "\n";
        return 1;
    }

    // per-worker progress buffers, merged into one log after the join
    std::vector<std::string> progress(static_cast<std::size_t>(request.parallel_runs));
    const SearchResult result = run_search(request, [&progress](int w) {
        GaHooks hooks;
        hooks.on_generation = [&progress, w](const GenerationStats& g) {
            char line[96];
            std::snprintf(line, sizeof line, "%lld %lld %.6f %d %d\n",
                          static_cast<long long>(g.generation),
                          static_cast<long long>(g.f_best), g.f_mean, g.partial_resets,
                          g.complete_resets);
            progress[static_cast<std::size_t>(w)] += line;
        };
        return hooks;
    });

    const std::string dir = resolve_output_dir(flags.out, manifest.output_dir);
    fs::create_directories(dir);
    for (std::size_t w = 0; w < result.outcomes.size(); ++w) {
        write_text_file(join_dir(dir, "outcome-w" + std::to_string(w) + ".json"),
                        outcome_to_json(result.outcomes[w]));
    }
    write_text_file(join_dir(dir, "catalog.txt"), catalog_to_text(result.catalog));
    write_text_file(join_dir(dir, "summary.txt"), summary_text(result.catalog));
    std::string log;
    for (std::size_t w = 0; w < progress.size(); ++w) {
        log += "# worker " + std::to_string(w) + " seed " +
               std::to_string(result.worker_seeds[w]) + "\n";
        log += progress[w];
    }
    write_text_file(join_dir(dir, "progress.log"), log);

    std::size_t raw = 0;
    bool budget_out = false;
    for (const auto& o : result.outcomes) {
        raw += o.solutions.size();
        budget_out = budget_out || o.budget_exhausted;
        for (const auto& warning : o.warnings) std::cout << "warning: " << warning << "\n";
    }
    std::cout << "seed " << manifest.config.rng_seed << ", workers " << result.outcomes.size()
              << "\n";
    std::cout << "solutions " << raw << ", isomorphism classes " << result.catalog.entries.size()
              << (budget_out ? " (wall-clock budget exhausted)" : "") << "\n";
    std::cout << summary_text(result.catalog);
    std::cout << "catalog: " << join_dir(dir, "catalog.txt") << "\n";
    return 0;
}

int cmd_catalog_merge(const std::string& out_path, const std::vector<std::string>& inputs) {
    Catalog merged = catalog_from_text(read_text_file(inputs.front()));
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        merged = merge_catalogs(merged, catalog_from_text(read_text_file(inputs[i])));
    }
    write_text_file(out_path, catalog_to_text(merged));
    std::cout << summary_text(merged);
    std::cout << "catalog: " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed strongly regular graphs: orbit matrices, GA search, classification"};
    app.require_subcommand(1);
    int rc = 0;

    auto* check = app.add_subcommand("check", "evaluate the counting identity for v k t lambda mu");
    std::vector<std::int64_t> check_values;
    check->add_option("params", check_values, "v k t lambda mu")->expected(5)->required();
    check->callback([&] { rc = cmd_check(check_values); });

    auto* verify = app.add_subcommand("verify", "verify a graph file against its parameters");
    std::string verify_path;
    verify->add_option("graph", verify_path, "adjacency text file")->required();
    verify->callback([&] { rc = cmd_verify(verify_path); });

    auto* fit = app.add_subcommand("fitness", "fitness, maximum, and deficit of a graph file");
    std::string fitness_path;
    fit->add_option("graph", fitness_path, "adjacency text file")->required();
    fit->callback([&] { rc = cmd_fitness(fitness_path); });

    auto* canon = app.add_subcommand("canon", "canonical form and automorphism group order");
    std::string canon_path;
    canon->add_option("graph", canon_path, "adjacency text file")->required();
    canon->callback([&] { rc = cmd_canon(canon_path); });

    auto* validate = app.add_subcommand("validate-om", "validate an orbit matrix file");
    std::string validate_path;
    validate->add_option("matrix", validate_path, "orbit matrix text file")->required();
    validate->callback([&] { rc = cmd_validate_om(validate_path); });

    auto* derive = app.add_subcommand("derive", "orbit matrices of a graph's prime-order "
                                                "automorphisms");
    std::string derive_path, derive_out;
    std::int64_t derive_prime = 0;
    derive->add_option("graph", derive_path, "adjacency text file")->required();
    derive->add_option("--prime", derive_prime, "automorphism order (prime)")->required();
    derive->add_option("--out", derive_out, "output directory");
    derive->callback([&] { rc = cmd_derive(derive_path, derive_prime, derive_out); });

    auto* search = app.add_subcommand("search", "run the GA search described by a manifest");
    SearchFlags sf;
    search->add_option("manifest", sf.manifest_path, "manifest JSON file")->required();
    auto* seed_opt = search->add_option("--seed", sf.seed, "override the RNG seed");
    search->add_option("--parallel", sf.parallel, "override the worker count");
    search->add_option("--pop", sf.pop, "override POP");
    search->add_option("--max-generations", sf.max_generations, "override MaxNrOfGenerations");
    search->add_option("--budget", sf.budget, "wall-clock budget in seconds per worker");
    search->add_flag("--stop-on-first", sf.stop_on_first, "stop after the first solution");
    search->add_option("--out", sf.out, "output directory");
    search->callback([&] {
        sf.seed_set = seed_opt->count() > 0;
        rc = cmd_search(sf);
    });

    auto* merge = app.add_subcommand("catalog-merge", "merge catalog files");
    std::string merge_out;
    std::vector<std::string> merge_inputs;
    merge->add_option("--out", merge_out, "merged catalog path")->required();
    merge->add_option("catalogs", merge_inputs, "catalog files")->expected(-1)->required();
    merge->callback([&] { rc = cmd_catalog_merge(merge_out, merge_inputs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
