#include "dsrg/search_driver.hpp"

#include "dsrg/rng.hpp"

#include <exception>
#include <filesystem>
#include <stdexcept>
#include <thread>
#include <utility>

namespace dsrg {

SearchRequest resolve_manifest(const RunManifest& manifest, const std::string& base_dir) {
    SearchRequest req;
    std::string text;
    if (!manifest.orbit_matrix_inline.empty()) {
        text = manifest.orbit_matrix_inline;
        req.om_id = "inline";
    } else {
        std::filesystem::path p(manifest.orbit_matrix_path);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        text = read_text_file(p.string());
        req.om_id = manifest.orbit_matrix_path;
    }
    OrbitMatrixFile file = parse_orbit_matrix_text(text);
    req.row_matrix = file.kind == 'C' ? column_to_row(file.matrix) : file.matrix;

    if (!manifest.generator.empty()) {
        const Permutation g = Permutation::from_cycle_string(
            manifest.generator, static_cast<int>(req.row_matrix.params.v));
        req.partition = g.is_identity()
                            ? OrbitPartition::trivial(static_cast<int>(req.row_matrix.params.v))
                            : orbits_of(g);
    } else if (req.row_matrix.prime == 1) {
        req.partition = OrbitPartition::trivial(static_cast<int>(req.row_matrix.params.v));
    } else {
        req.partition = OrbitPartition::standard(req.row_matrix.lengths, req.row_matrix.prime);
    }
    req.config = manifest.config;
    req.parallel_runs = manifest.parallel_runs;
    return req;
}

std::vector<std::uint64_t> derive_worker_seeds(std::uint64_t master_seed, int workers) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(workers));
    std::uint64_t state = master_seed;
    for (int w = 0; w < workers; ++w) {
        seeds.push_back(w == 0 ? master_seed : splitmix64(state));
    }
    return seeds;
}

SearchResult run_search(const SearchRequest& request, const HookFactory& hooks_for) {
    if (request.parallel_runs < 1) {
        throw std::invalid_argument("run_search: parallel_runs must be >= 1");
    }
    const int workers = request.parallel_runs;
    SearchResult result;
    result.worker_seeds = derive_worker_seeds(request.config.rng_seed, workers);
    result.outcomes.resize(static_cast<std::size_t>(workers));

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        GaConfig cfg = request.config;
        cfg.rng_seed = result.worker_seeds[static_cast<std::size_t>(w)];
        GaHooks hooks = hooks_for ? hooks_for(w) : GaHooks{};
        threads.emplace_back([&request, &result, &errors, w, cfg = std::move(cfg),
                              hooks = std::move(hooks)]() {
            try {
                result.outcomes[static_cast<std::size_t>(w)] =
                    run_ga(request.row_matrix, request.partition, cfg, hooks);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    result.catalog.params = request.row_matrix.params;
    std::size_t index = 0;
    for (int w = 0; w < workers; ++w) {
        const auto& outcome = result.outcomes[static_cast<std::size_t>(w)];
        for (const auto& sol : outcome.solutions) {
            Provenance prov;
            prov.orbit_matrix = request.om_id;
            prov.seed = result.worker_seeds[static_cast<std::size_t>(w)];
            prov.generation = sol.generation;
            catalog_insert(result.catalog, sol.matrix, prov, index++);
        }
    }
    return result;
}

}  // namespace dsrg
