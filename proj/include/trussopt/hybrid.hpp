#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "trussopt/ga.hpp"
#include "trussopt/sa.hpp"

namespace trussopt {

struct HybridParams {
    static constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

    std::size_t t_sa = 20;  // generations between SA launches; kNever disables SA
    GaParams ga;
    SaParams sa;
    std::optional<PenaltyParams> penalty;  // default PenaltyParams::defaults_for(model)
    bool protect_best = true;              // never pick the current best as the SA victim
    std::optional<std::size_t> max_evaluations;
    std::optional<std::size_t> stagnation_generations;  // stop after this many generations without gain
    double stagnation_tolerance = 1e-8;

    void check() const;
};

struct GenerationRecord {
    std::size_t generation = 0;
    double best_f = 0.0;
    double mean_f = 0.0;  // over finite values
    std::optional<double> best_feasible_weight;
    std::size_t evaluations = 0;
    bool sa_ran = false;
    bool operator==(const GenerationRecord&) const = default;
};

struct RunRecord {
    std::vector<GenerationRecord> generations;
    Individual best;  // lowest penalized objective in the final population
    std::optional<Individual> best_feasible;
    std::size_t total_evaluations = 0;
    std::size_t sa_runs = 0;
    double wall_seconds = 0.0;

    /// Evaluation count at the first generation whose best feasible weight
    /// is <= target, if any.
    std::optional<std::size_t> evaluations_to_reach(double target) const;

    /// Wall time is not compared.
    bool operator==(const RunRecord& other) const;
};

/// Removal weights 1 / fitness = 1 + F_i - F_min. Infinite F dominates: if any
/// eligible individual has it, only those get weight. `excluded` gets 0.
std::vector<double> removal_weights(std::span<const Individual> individuals,
                                    std::optional<std::size_t> excluded);

std::size_t remove_victim_index(const Population& pop, bool protect_best, Rng& rng);

RunRecord run(const TrussModel& model, const HybridParams& params, std::uint64_t seed);

struct ComparisonEntry {
    std::uint64_t seed = 0;
    double hybrid_weight = 0.0;  // +inf when no feasible design was found
    double ga_weight = 0.0;
    std::size_t hybrid_evaluations = 0;
    std::size_t ga_evaluations = 0;
    std::optional<std::size_t> hybrid_evaluations_to_target;  // target = GA median
    std::optional<std::size_t> ga_evaluations_to_target;
    bool hybrid_reaches_first = false;
};

struct ComparisonSummary {
    std::vector<ComparisonEntry> entries;
    double median_hybrid = 0.0;
    double median_ga = 0.0;
    std::size_t hybrid_reaches_first_count = 0;
};

double median(std::vector<double> values);

/// Runs H-SAGA with `params`, then a plain GA (t_sa = kNever) on the same
/// seed capped at the evaluation count the hybrid used.
ComparisonSummary compare_plain_ga(const TrussModel& model, const HybridParams& params,
                                   std::span<const std::uint64_t> seeds);

}  // namespace trussopt
