#include "trussopt/evaluation.hpp"

#include <cmath>
#include <limits>

namespace trussopt {

Evaluator::Evaluator(const TrussModel& model, PenaltyParams penalty) : analyzer_(model), penalty_(penalty) {}

Individual Evaluator::evaluate(DesignVector design, std::size_t iteration) {
    Individual ind;
    ind.design = clamp_to_bounds(model(), std::move(design));
    ind.evaluated_at_generation = iteration;
    ++evaluations_;
    try {
        const AnalysisResult result = analyzer_.analyze(ind.design);
        ind.weight = result.weight;
        ind.violation_total = violation_total(model(), result);
        ind.penalized = penalized_objective(ind.weight, ind.violation_total, penalty_, iteration);
    } catch (const SingularStructure&) {
        ind.weight = analyzer_.weight(ind.design);
        ind.violation_total = std::numeric_limits<double>::infinity();
        ind.penalized = std::numeric_limits<double>::infinity();
    }
    if (ind.feasible() && (!best_feasible_ || ind.weight < best_feasible_->weight)) best_feasible_ = ind;
    return ind;
}

void Evaluator::rescore(Individual& individual, std::size_t iteration) const {
    if (std::isinf(individual.violation_total)) return;
    individual.penalized = penalized_objective(individual.weight, individual.violation_total, penalty_, iteration);
}

}  // namespace trussopt
