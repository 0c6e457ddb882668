#pragma once

#include <cstddef>
#include <vector>

#include "trussopt/fem.hpp"

namespace trussopt {

enum class ConstraintKind { Stress, Displacement, Buckling };

const char* to_string(ConstraintKind kind);

/// One evaluated constraint. `ratio` is |quantity| / |limit| for the active
/// side, so g = ratio - 1 and the constraint holds when ratio <= 1.
struct ConstraintInstance {
    ConstraintKind kind = ConstraintKind::Stress;
    std::size_t load_case = 0;
    std::size_t index = 0;  // element id for stress/buckling, node id for displacement
    Axis axis = Axis::X;    // displacement only
    double value = 0.0;
    double limit = 0.0;
    double ratio = 0.0;
};

struct ConstraintReport {
    std::vector<double> violations;  // S_i = max(g_i, 0)
    std::vector<ConstraintInstance> instances;
    double total = 0.0;
    bool feasible = true;

    /// Largest normalized ratio over all constraints (0 when there are none).
    double max_ratio() const;
    bool feasible_within(double slack) const { return max_ratio() <= 1.0 + slack; }
};

/// Dynamic penalty p = alpha * iteration^beta_exp * sum(S_i).
struct PenaltyParams {
    double alpha = 1.0;
    double beta_exp = 1.0;

    /// alpha = weight of the all-area-max design, beta_exp = 1.
    static PenaltyParams defaults_for(const TrussModel& model);
};

ConstraintReport evaluate_constraints(const TrussModel& model, const AnalysisResult& result);

/// Sum of violations without materializing the per-constraint report.
double violation_total(const TrussModel& model, const AnalysisResult& result);

double penalty(double violation_total, const PenaltyParams& params, std::size_t iteration);
double penalty(const ConstraintReport& report, const PenaltyParams& params, std::size_t iteration);

double penalized_objective(double weight, double violation_total, const PenaltyParams& params, std::size_t iteration);
double penalized_objective(double weight, const ConstraintReport& report, const PenaltyParams& params,
                           std::size_t iteration);

}  // namespace trussopt
