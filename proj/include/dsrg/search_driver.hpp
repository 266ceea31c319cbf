#pragma once

#include "dsrg/catalog.hpp"
#include "dsrg/ga.hpp"
#include "dsrg/text_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dsrg {

/// A fully resolved search job: row orbit matrix, the vertex partition it is
/// indexed against, and the GA configuration.
struct SearchRequest {
    OrbitMatrix row_matrix;
    OrbitPartition partition;
    GaConfig config;
    int parallel_runs = 1;
    std::string om_id;  // provenance label for catalog entries
};

struct SearchResult {
    Catalog catalog;                         // classified solutions from all workers
    std::vector<SearchOutcome> outcomes;     // one per worker, in worker order
    std::vector<std::uint64_t> worker_seeds; // seed actually used by each worker
};

/// Loads the orbit matrix a manifest points at (inline text or a path,
/// resolved against base_dir), converts column form to row form, and builds
/// the partition: from the manifest's generator when given, otherwise the
/// consecutive-block partition realizing the matrix's orbit lengths.
SearchRequest resolve_manifest(const RunManifest& manifest, const std::string& base_dir);

/// Worker 0 uses the master seed unchanged, so a single-worker search is
/// byte-identical to run_ga with that seed; workers 1..n-1 draw from a
/// splitmix64 chain seeded by the master seed.
std::vector<std::uint64_t> derive_worker_seeds(std::uint64_t master_seed, int workers);

using HookFactory = std::function<GaHooks(int worker)>;

/// Runs `parallel_runs` independent GA searches (one thread each) and merges
/// every verified solution into one catalog. The catalog and outcome list are
/// assembled in worker order after all threads join, so results are
/// deterministic for a fixed master seed and worker count.
SearchResult run_search(const SearchRequest& request, const HookFactory& hooks_for = {});

}  // namespace dsrg
