#pragma once

#include "dsrg/bit_expansion.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/orbit_matrix.hpp"
#include "dsrg/orbit_partition.hpp"
#include "dsrg/params.hpp"
#include "dsrg/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dsrg {

/// One candidate adjacency matrix. Gene i is the block-row bits[i]; the
/// matrix is always exactly the expansion of the bits, and fitness/hash are
/// kept in sync by the operations below.
struct Individual {
    Matrix matrix;
    std::vector<std::vector<BitPattern>> bits;
    std::int64_t fitness = 0;
    std::uint64_t hash = 0;
};

bool same_individual(const Individual& a, const Individual& b);

struct GaConfig {
    int pop_size = 100;                   // POP; must be a positive multiple of 4
    std::int64_t max_generations = 100000;  // MaxNrOfGenerations, per run
    double mutation_probability = 1.0;    // p_m
    double crossover_probability = 1.0;   // p_c
    int genes_per_crossover = 1;          // NrGenesForCrossover
    int bits_per_mutation = 1;            // NrBitsForMutation
    std::int64_t stagnation_threshold = 100;  // f_bestNrOfRepeatsMax
    int max_partial_resets = 10;          // MaxNrOfPartialResets
    int max_complete_resets = 100;        // MaxNrOfCompleteResets
    double starting_percentage = 0.10;    // StartingPercentage
    std::uint64_t rng_seed = 0;
    double wall_clock_budget = 0.0;       // seconds; <= 0 means unlimited
    bool stop_on_first = false;           // literal pseudocode: quit after one hit

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

struct SolutionRecord {
    Matrix matrix;
    std::int64_t generation = 0;  // global generation index when found
    int partial_run = 0;
    int complete_run = 0;
};

struct RunStats {
    int complete_run = 0;
    int partial_run = 0;
    std::int64_t generations = 0;
    std::int64_t f_best = 0;
    std::string exit;  // solution | stagnation | generation-cap | budget | degenerate
};

struct SearchOutcome {
    Params params;
    std::uint64_t seed = 0;
    std::int64_t max_fitness = 0;
    std::vector<SolutionRecord> solutions;  // duplicates suppressed, not deduped up to iso
    std::vector<RunStats> runs;
    std::vector<std::int64_t> trajectory;  // f_best after every global generation
    std::vector<std::string> warnings;
    std::int64_t generations_total = 0;
    bool budget_exhausted = false;
    double elapsed_seconds = 0.0;  // excluded from serialization: runs must compare byte-equal
};

struct GenerationStats {
    std::int64_t generation = 0;  // global, starting at 1
    std::int64_t f_best = 0;
    double f_mean = 0.0;
    int partial_resets = 0;
    int complete_resets = 0;
};

/// Test and logging hooks. fitness_override replaces the fitness function
/// for the whole run (solution collection still requires verify_dsrg).
struct GaHooks {
    std::function<std::int64_t(const Matrix&)> fitness_override;
    std::function<void(const GenerationStats&)> on_generation;
    std::function<void(int retained, int partial_resets, int complete_resets)> on_partial_reset;
    std::function<void(int complete_resets)> on_complete_reset;
};

/// Uniformly random admissible first row; fixed bits cost no rng draws.
BitPattern new_bit(const BitSpec& spec, Rng& rng);

/// Individual with every bit drawn via new_bit; k-regular and zero-diagonal
/// by construction, and quotients back to m.
Individual new_individual(const RowOrbitMatrix& m, const OrbitPartition& part, Rng& rng);

/// starting members first, then fresh draws; duplicates are rejected until
/// 1000 consecutive draws fail, after which duplicates are admitted and a
/// warning is appended (tiny search spaces cannot fill a population).
std::vector<Individual> generate_population(const RowOrbitMatrix& m, const OrbitPartition& part,
                                            std::size_t target_size,
                                            const std::vector<Individual>& starting, Rng& rng,
                                            std::vector<std::string>* warnings = nullptr);

/// Redraws n_bits distinct non-fixed bits (clamped to the number that
/// exist). Throws std::logic_error if every bit is fixed.
Individual mutate(const Individual& ind, const RowOrbitMatrix& m, const OrbitPartition& part,
                  int n_bits, Rng& rng);

/// Swaps the genes (block-rows) at n_genes random positions between copies
/// of the parents. Throws std::invalid_argument if n_genes exceeds the
/// number of genes.
std::pair<Individual, Individual> crossover(const Individual& p1, const Individual& p2,
                                            const RowOrbitMatrix& m, const OrbitPartition& part,
                                            int n_genes, Rng& rng);

/// One tournament on population[group_start .. group_start+3]: the two best
/// become parents (ties to the lower index), parents are forced distinct by
/// mutation, crossover and mutation produce two population-unique children,
/// and the children overwrite the two worst slots. Uniqueness loops are
/// capped at 1000 tries; on exhaustion the current candidate is accepted.
void work_on_four(std::size_t group_start, std::vector<Individual>& population,
                  const RowOrbitMatrix& m, const OrbitPartition& part, const GaConfig& config,
                  Rng& rng);

/// The full search: complete resets around partial resets around
/// generations. Every generation shuffles the population and runs
/// work_on_four with stride 4; stagnation for stagnation_threshold
/// generations triggers a partial reset that retains the best
/// ceil(starting_percentage * POP) individuals; exhausting
/// max_partial_resets runs triggers a complete reset from scratch. Every
/// max-fitness individual that passes verification is collected (the search
/// keeps going unless stop_on_first is set). Identical inputs, including the
/// seed, give identical outcomes.
SearchOutcome run_ga(const RowOrbitMatrix& m, const OrbitPartition& part, const GaConfig& config,
                     const GaHooks& hooks = {});

}  // namespace dsrg
