#include "dsrg/ga.hpp"

#include "dsrg/graph_ops.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dsrg {

namespace {

using Clock = std::chrono::steady_clock;
using WarnFn = std::function<void(const std::string&)>;
constexpr int kRetryCap = 1000;

// Precomputed per-search state shared by all operators.
struct Ctx {
    const RowOrbitMatrix& m;
    const OrbitPartition& part;
    std::vector<std::vector<BitSpec>> specs;
    std::vector<std::pair<Index, Index>> non_fixed;
    std::function<std::int64_t(const Matrix&)> score;
};

Ctx make_ctx(const RowOrbitMatrix& m, const OrbitPartition& part,
             std::function<std::int64_t(const Matrix&)> score) {
    Ctx ctx{m, part, {}, {}, std::move(score)};
    const Index b = m.block_count();
    ctx.specs.resize(static_cast<std::size_t>(b));
    for (Index i = 0; i < b; ++i) {
        auto& row = ctx.specs[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(b));
        for (Index j = 0; j < b; ++j) {
            row.push_back(bit_spec(m, i, j));
            if (!row.back().fixed) ctx.non_fixed.emplace_back(i, j);
        }
    }
    return ctx;
}

void rescore(Individual& ind, const Ctx& ctx) {
    ind.fitness = ctx.score(ind.matrix);
    ind.hash = matrix_hash(ind.matrix);
}

bool in_population(const std::vector<Individual>& pop, const Individual& x) {
    for (const auto& p : pop) {
        if (same_individual(p, x)) return true;
    }
    return false;
}

Individual new_individual_impl(const Ctx& ctx, Rng& rng) {
    const auto b = ctx.specs.size();
    Individual ind;
    ind.bits.assign(b, std::vector<BitPattern>(b));
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            ind.bits[i][j] = new_bit(ctx.specs[i][j], rng);
        }
    }
    ind.matrix = expand_bits(ctx.m, ctx.part, ind.bits);
    rescore(ind, ctx);
    return ind;
}

std::vector<Individual> generate_population_impl(const Ctx& ctx, std::size_t target,
                                                 const std::vector<Individual>& starting,
                                                 Rng& rng, const WarnFn& warn) {
    if (starting.size() > target) {
        throw std::invalid_argument("generate_population: starting exceeds target size");
    }
    std::vector<Individual> pop = starting;
    pop.reserve(target);
    int failures = 0;
    bool allow_dups = false;
    while (pop.size() < target) {
        Individual ind = new_individual_impl(ctx, rng);
        if (!allow_dups && in_population(pop, ind)) {
            if (++failures >= kRetryCap) {
                allow_dups = true;
                warn("population padded with duplicates: search space smaller than POP");
                pop.push_back(std::move(ind));
            }
            continue;
        }
        failures = 0;
        pop.push_back(std::move(ind));
    }
    return pop;
}

Individual mutate_impl(const Ctx& ctx, const Individual& ind, int n_bits, Rng& rng) {
    if (n_bits < 1) throw std::invalid_argument("mutate: n_bits must be positive");
    if (ctx.non_fixed.empty()) {
        throw std::logic_error("mutate: every bit is fixed, nothing can change");
    }
    const std::size_t k =
        std::min<std::size_t>(static_cast<std::size_t>(n_bits), ctx.non_fixed.size());
    Individual out = ind;
    for (std::size_t idx : rng.sample(ctx.non_fixed.size(), k)) {
        const auto [i, j] = ctx.non_fixed[idx];
        out.bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            new_bit(ctx.specs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], rng);
    }
    out.matrix = expand_bits(ctx.m, ctx.part, out.bits);
    rescore(out, ctx);
    return out;
}

std::pair<Individual, Individual> crossover_impl(const Ctx& ctx, const Individual& p1,
                                                 const Individual& p2, int n_genes, Rng& rng) {
    const auto b = ctx.specs.size();
    if (n_genes < 0 || static_cast<std::size_t>(n_genes) > b) {
        throw std::invalid_argument("crossover: gene count out of range");
    }
    Individual c1 = p1;
    Individual c2 = p2;
    for (std::size_t pos : rng.sample(b, static_cast<std::size_t>(n_genes))) {
        std::swap(c1.bits[pos], c2.bits[pos]);
    }
    c1.matrix = expand_bits(ctx.m, ctx.part, c1.bits);
    c2.matrix = expand_bits(ctx.m, ctx.part, c2.bits);
    rescore(c1, ctx);
    rescore(c2, ctx);
    return {std::move(c1), std::move(c2)};
}

// Ranks the 4-block best to worst: higher fitness first, lower index on ties.
std::array<std::size_t, 4> rank_four(const std::vector<Individual>& pop, std::size_t start) {
    std::array<std::size_t, 4> order{start, start + 1, start + 2, start + 3};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pop[a].fitness != pop[b].fitness) return pop[a].fitness > pop[b].fitness;
        return a < b;
    });
    return order;
}

void work_on_four_impl(const Ctx& ctx, const GaConfig& cfg, std::vector<Individual>& pop,
                       std::size_t start, Rng& rng, const WarnFn& warn) {
    const auto order = rank_four(pop, start);
    Individual parent1 = pop[order[0]];
    Individual parent2 = pop[order[1]];

    for (int tries = 0; same_individual(parent1, parent2); ++tries) {
        if (tries >= kRetryCap) {
            warn("parent uniqueness retries exhausted; proceeding with equal parents");
            break;
        }
        Individual mutated = mutate_impl(ctx, parent2, cfg.bits_per_mutation, rng);
        if (!in_population(pop, mutated)) parent2 = std::move(mutated);
    }

    Individual child1;
    Individual child2;
    if (rng.chance(cfg.crossover_probability)) {
        std::tie(child1, child2) = crossover_impl(ctx, parent1, parent2,
                                                  cfg.genes_per_crossover, rng);
    } else {
        child1 = parent1;
        child2 = parent2;
    }

    auto polish = [&](Individual child) {
        if (!rng.chance(cfg.mutation_probability)) return child;
        for (int tries = 0;;) {
            Individual mutated = mutate_impl(ctx, child, cfg.bits_per_mutation, rng);
            if (!in_population(pop, mutated)) return mutated;
            if (++tries >= kRetryCap) {
                warn("child uniqueness retries exhausted; accepting a duplicate");
                return mutated;
            }
        }
    };
    child1 = polish(std::move(child1));
    child2 = polish(std::move(child2));

    pop[order[3]] = std::move(child1);
    pop[order[2]] = std::move(child2);
}

std::int64_t best_fitness(const std::vector<Individual>& pop) {
    std::int64_t best = pop.front().fitness;
    for (const auto& p : pop) best = std::max(best, p.fitness);
    return best;
}

double mean_fitness(const std::vector<Individual>& pop) {
    std::int64_t sum = 0;
    for (const auto& p : pop) sum += p.fitness;
    return static_cast<double>(sum) / static_cast<double>(pop.size());
}

// Copies of the `count` best individuals, ties to the lower index.
std::vector<Individual> retain_best(const std::vector<Individual>& pop, std::size_t count) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop[a].fitness > pop[b].fitness;
    });
    std::vector<Individual> kept;
    kept.reserve(count);
    for (std::size_t i = 0; i < count && i < order.size(); ++i) kept.push_back(pop[order[i]]);
    return kept;
}

}  // namespace

bool same_individual(const Individual& a, const Individual& b) {
    if (a.hash != b.hash) return false;
    if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) return false;
    return (a.matrix.array() == b.matrix.array()).all();
}

void GaConfig::validate() const {
    if (pop_size <= 0 || pop_size % 4 != 0) {
        throw std::invalid_argument("GaConfig: POP must be a positive multiple of 4");
    }
    if (max_generations < 0) throw std::invalid_argument("GaConfig: negative generation cap");
    if (mutation_probability < 0.0 || mutation_probability > 1.0 ||
        crossover_probability < 0.0 || crossover_probability > 1.0) {
        throw std::invalid_argument("GaConfig: probabilities must lie in [0,1]");
    }
    if (starting_percentage < 0.0 || starting_percentage > 1.0) {
        throw std::invalid_argument("GaConfig: starting percentage must lie in [0,1]");
    }
    if (genes_per_crossover < 0) throw std::invalid_argument("GaConfig: negative crossover genes");
    if (bits_per_mutation < 1) throw std::invalid_argument("GaConfig: mutation needs >= 1 bit");
    if (stagnation_threshold < 1 || max_partial_resets < 1 || max_complete_resets < 1) {
        throw std::invalid_argument("GaConfig: reset thresholds must be positive");
    }
}

BitPattern new_bit(const BitSpec& spec, Rng& rng) {
    const auto n = static_cast<std::size_t>(spec.cols);
    if (is_fixed_bit(spec)) {
        // Unique candidate; do not consume randomness.
        BitPattern row(n, 0);
        if (spec.rows == 1 || spec.cols == 1) {
            if (spec.row_sum > 0) std::fill(row.begin(), row.end(), std::uint8_t{1});
        } else if (spec.row_sum > 0) {
            const std::size_t start = spec.diagonal ? 1 : 0;
            std::fill(row.begin() + static_cast<std::ptrdiff_t>(start), row.end(),
                      std::uint8_t{1});
        }
        return row;
    }
    const std::size_t start = spec.diagonal ? 1 : 0;
    BitPattern row(n, 0);
    for (std::size_t pos : rng.sample(n - start, static_cast<std::size_t>(spec.row_sum))) {
        row[start + pos] = 1;
    }
    return row;
}

Individual new_individual(const RowOrbitMatrix& m, const OrbitPartition& part, Rng& rng) {
    const Ctx ctx = make_ctx(m, part, [&m](const Matrix& a) { return fitness(a, m.params); });
    return new_individual_impl(ctx, rng);
}

std::vector<Individual> generate_population(const RowOrbitMatrix& m, const OrbitPartition& part,
                                            std::size_t target_size,
                                            const std::vector<Individual>& starting, Rng& rng,
                                            std::vector<std::string>* warnings) {
    const Ctx ctx = make_ctx(m, part, [&m](const Matrix& a) { return fitness(a, m.params); });
    return generate_population_impl(ctx, target_size, starting, rng, [&](const std::string& w) {
        if (warnings) warnings->push_back(w);
    });
}

Individual mutate(const Individual& ind, const RowOrbitMatrix& m, const OrbitPartition& part,
                  int n_bits, Rng& rng) {
    const Ctx ctx = make_ctx(m, part, [&m](const Matrix& a) { return fitness(a, m.params); });
    return mutate_impl(ctx, ind, n_bits, rng);
}

std::pair<Individual, Individual> crossover(const Individual& p1, const Individual& p2,
                                            const RowOrbitMatrix& m, const OrbitPartition& part,
                                            int n_genes, Rng& rng) {
    const Ctx ctx = make_ctx(m, part, [&m](const Matrix& a) { return fitness(a, m.params); });
    return crossover_impl(ctx, p1, p2, n_genes, rng);
}

void work_on_four(std::size_t group_start, std::vector<Individual>& population,
                  const RowOrbitMatrix& m, const OrbitPartition& part, const GaConfig& config,
                  Rng& rng) {
    if (group_start + 4 > population.size()) {
        throw std::invalid_argument("work_on_four: group extends past the population");
    }
    const Ctx ctx = make_ctx(m, part, [&m](const Matrix& a) { return fitness(a, m.params); });
    work_on_four_impl(ctx, config, population, group_start, rng, [](const std::string&) {});
}

SearchOutcome run_ga(const RowOrbitMatrix& m, const OrbitPartition& part, const GaConfig& config,
                     const GaHooks& hooks) {
    config.validate();
    if (auto rep = validate_row_orbit_matrix(m); !rep.ok) {
        throw std::invalid_argument("run_ga: invalid orbit matrix: " + rep.violation);
    }
    if (!check_feasibility(m.params)) {
        throw std::invalid_argument("run_ga: parameters fail the counting identity");
    }
    if (static_cast<std::int64_t>(part.degree) != m.params.v ||
        static_cast<Index>(part.orbit_count()) != m.block_count() || part.lengths != m.lengths ||
        part.order != m.prime) {
        throw std::invalid_argument("run_ga: partition does not match the orbit matrix");
    }
    if (static_cast<Index>(config.genes_per_crossover) > m.block_count()) {
        throw std::invalid_argument("run_ga: genes_per_crossover exceeds the gene count");
    }

    const Params params = m.params;
    const std::int64_t target = max_fitness(params);
    std::function<std::int64_t(const Matrix&)> score =
        hooks.fitness_override
            ? hooks.fitness_override
            : std::function<std::int64_t(const Matrix&)>(
                  [params](const Matrix& a) { return fitness(a, params); });
    const Ctx ctx = make_ctx(m, part, std::move(score));

    SearchOutcome out;
    out.params = params;
    out.seed = config.rng_seed;
    out.max_fitness = target;

    auto warn = [&out](const std::string& w) {
        if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end()) {
            out.warnings.push_back(w);
        }
    };

    Rng rng(config.rng_seed);
    const auto t0 = Clock::now();
    auto over_budget = [&]() {
        if (config.wall_clock_budget <= 0.0) return false;
        return std::chrono::duration<double>(Clock::now() - t0).count() >
               config.wall_clock_budget;
    };

    // Collects every max-fitness verified individual not already recorded.
    auto collect = [&](const std::vector<Individual>& pop, std::int64_t gen, int partial,
                       int complete) {
        bool any = false;
        for (const auto& ind : pop) {
            if (ind.fitness != target) continue;
            if (!verify_dsrg(ind.matrix, params)) {
                warn("max-fitness individual failed verification; dropped");
                continue;
            }
            bool seen = false;
            for (const auto& s : out.solutions) {
                if (s.matrix.rows() == ind.matrix.rows() &&
                    (s.matrix.array() == ind.matrix.array()).all()) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                out.solutions.push_back({ind.matrix, gen, partial, complete});
                any = true;
            }
        }
        return any;
    };

    const std::size_t retained_target = std::min<std::size_t>(
        static_cast<std::size_t>(std::ceil(
            config.starting_percentage * static_cast<double>(config.pop_size) - 1e-9)),
        static_cast<std::size_t>(config.pop_size));
    const bool degenerate = ctx.non_fixed.empty();

    std::int64_t global_gen = 0;
    bool stop_all = false;
    int complete = 0;
    while (complete < config.max_complete_resets && !stop_all) {
        std::vector<Individual> starting;
        int partial = 0;
        while (partial < config.max_partial_resets && !stop_all) {
            auto pop = generate_population_impl(ctx, static_cast<std::size_t>(config.pop_size),
                                                starting, rng, warn);
            std::int64_t f_best = best_fitness(pop);
            bool found = collect(pop, global_gen, partial, complete);

            RunStats rs;
            rs.complete_run = complete;
            rs.partial_run = partial;

            if (degenerate) {
                warn("every bit is fixed: the orbit matrix admits exactly one expansion");
                rs.generations = 0;
                rs.f_best = f_best;
                rs.exit = "degenerate";
                out.runs.push_back(rs);
                stop_all = true;
                break;
            }

            std::int64_t gens = 0;
            std::int64_t repeats = 0;
            while (f_best < target && gens < config.max_generations) {
                if (over_budget()) {
                    out.budget_exhausted = true;
                    rs.exit = "budget";
                    stop_all = true;
                    break;
                }
                rng.shuffle(pop);
                for (std::size_t i = 0; i + 4 <= pop.size(); i += 4) {
                    work_on_four_impl(ctx, config, pop, i, rng, warn);
                }
                ++gens;
                ++global_gen;
                const std::int64_t new_best = best_fitness(pop);
                found = collect(pop, global_gen, partial, complete) || found;
                out.trajectory.push_back(new_best);
                if (hooks.on_generation) {
                    hooks.on_generation(
                        {global_gen, new_best, mean_fitness(pop), partial, complete});
                }
                if (new_best > f_best) {
                    f_best = new_best;
                    repeats = 0;
                } else {
                    ++repeats;
                }
                if (f_best >= target) break;
                if (repeats >= config.stagnation_threshold) {
                    starting = retain_best(pop, retained_target);
                    if (hooks.on_partial_reset) {
                        hooks.on_partial_reset(static_cast<int>(starting.size()), partial + 1,
                                               complete);
                    }
                    rs.exit = "stagnation";
                    break;
                }
            }
            if (rs.exit.empty()) rs.exit = f_best >= target ? "solution" : "generation-cap";
            rs.generations = gens;
            rs.f_best = f_best;
            out.runs.push_back(rs);
            ++partial;
            if (found && config.stop_on_first) stop_all = true;
        }
        if (stop_all) break;
        ++complete;
        if (hooks.on_complete_reset) hooks.on_complete_reset(complete);
    }

    out.generations_total = global_gen;
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

}  // namespace dsrg
