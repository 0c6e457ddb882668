#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "trussopt/constraints.hpp"
#include "trussopt/fem.hpp"

namespace trussopt {

using Rng = std::mt19937_64;

/// A design with its cached raw weight, violation sum and penalized objective.
struct Individual {
    DesignVector design;
    double weight = 0.0;
    double violation_total = 0.0;
    double penalized = 0.0;
    std::size_t evaluated_at_generation = 0;

    bool feasible() const { return violation_total == 0.0; }
    bool operator==(const Individual&) const = default;
};

/// Turns designs into Individuals: clamp, analyze, penalize. Counts analyses
/// and remembers the lightest feasible design it has ever seen.
///
/// A design whose analysis fails (singular stiffness) gets an infinite
/// penalized objective instead of aborting the search.
class Evaluator {
public:
    Evaluator(const TrussModel& model, PenaltyParams penalty);

    Individual evaluate(DesignVector design, std::size_t iteration);

    /// Re-penalizes a cached individual for another iteration (no analysis).
    void rescore(Individual& individual, std::size_t iteration) const;

    const TrussModel& model() const { return analyzer_.model(); }
    const TrussAnalyzer& analyzer() const { return analyzer_; }
    const PenaltyParams& penalty_params() const { return penalty_; }
    std::size_t evaluations() const { return evaluations_; }
    const std::optional<Individual>& best_feasible() const { return best_feasible_; }

private:
    TrussAnalyzer analyzer_;
    PenaltyParams penalty_;
    std::size_t evaluations_ = 0;
    std::optional<Individual> best_feasible_;
};

/// Uniform draw in [0, 1).
inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace trussopt
