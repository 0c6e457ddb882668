#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trussopt/evaluation.hpp"

namespace trussopt {

struct GaParams {
    std::size_t population_size = 50;
    double crossover_rate = 0.9;
    std::optional<double> mutation_rate;  // default 1 / n_variables
    double mutation_sigma_fraction = 0.1;
    std::size_t elite_count = 1;
    std::size_t max_generations = 300;
    std::uint64_t seed = 0;

    double mutation_rate_for(std::size_t n_variables) const;
    /// Throws std::invalid_argument when a field is out of range.
    void check() const;
};

struct Population {
    std::vector<Individual> individuals;
    std::size_t generation = 0;
    Rng rng;

    /// Index of the lowest penalized objective (first on ties).
    std::size_t best_index() const;
    /// Indices sorted by ascending penalized objective, ties by index.
    std::vector<std::size_t> ranking() const;
};

Population init_population(Evaluator& evaluator, const GaParams& params);

/// fitness(i) = 1 / (1 + F_i - F_min). Non-finite F gets fitness 0; if no
/// individual has a finite F all fitnesses are 1.
std::vector<double> fitness_values(std::span<const Individual> individuals);

/// Normalized selection probabilities (fitness / sum).
std::vector<double> selection_probabilities(std::span<const Individual> individuals);

/// Roulette draw of one index from nonnegative weights.
std::size_t roulette_draw(std::span<const double> weights, Rng& rng);

std::vector<std::size_t> select_mating_pool(std::span<const Individual> individuals, std::size_t pool_size,
                                            Rng& rng);

/// Blend crossover (BLX-0.5) clamped to the model bounds.
std::pair<DesignVector, DesignVector> crossover(const TrussModel& model, const DesignVector& parent_a,
                                                const DesignVector& parent_b, double crossover_rate, Rng& rng);

DesignVector mutate(const TrussModel& model, DesignVector design, double mutation_rate, double sigma_fraction,
                    Rng& rng);

/// One generational replacement. Elites are carried over and re-penalized
/// at the new iteration; the rest come from select, crossover, mutate.
void step_generation(Population& pop, Evaluator& evaluator, const GaParams& params);

}  // namespace trussopt
