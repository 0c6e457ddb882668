#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trussopt/truss_model.hpp"

namespace trussopt {

/// Displacements (one Vec3 per node, fixed and pruned dofs exactly zero) and
/// axial stresses (one per element, tension positive) for one load case.
struct LoadCaseResult {
    std::vector<Vec3> displacements;
    std::vector<double> stresses;
};

struct AnalysisResult {
    DesignVector design;                // the analyzed areas, one per group
    std::vector<LoadCaseResult> cases;  // same order as model.load_cases
    double weight = 0.0;
};

/// Reduced stiffness matrix over the free dofs of `dofs`.
struct StiffnessSystem {
    DofMap dofs;
    Eigen::MatrixXd matrix;
};

double element_length(const TrussModel& model, const Element& element);

double structure_weight(const TrussModel& model, const DesignVector& design);

StiffnessSystem assemble_global_stiffness(const TrussModel& model, const DesignVector& design);

LoadCaseResult solve_load_case(const TrussModel& model, const DesignVector& design, const LoadCase& load_case);

AnalysisResult analyze(const TrussModel& model, const DesignVector& design);

/// Euler buckling bound -K*E*A/L^2 (ksi, negative).
double buckling_stress_limit(const TrussModel& model, const Element& element, double area);

/// Direct stiffness solver with the element geometry of one model precomputed.
/// Holds a reference to the model, which must outlive it. `analyze` is const
/// and reentrant.
class TrussAnalyzer {
public:
    explicit TrussAnalyzer(const TrussModel& model);

    const TrussModel& model() const { return *model_; }
    const DofMap& dofs() const { return dofs_; }
    const std::vector<double>& lengths() const { return lengths_; }

    double weight(const DesignVector& design) const;
    Eigen::MatrixXd stiffness(const DesignVector& design) const;
    AnalysisResult analyze(const DesignVector& design) const;
    AnalysisResult analyze(const DesignVector& design, const std::vector<LoadCase>& cases) const;

    /// Singularity threshold relative to the largest stiffness diagonal.
    static constexpr double kPivotTolerance = 1e-10;

private:
    const TrussModel* model_;
    DofMap dofs_;
    std::vector<double> lengths_;
    std::vector<Vec3> directions_;  // unit vectors a -> b
};

}  // namespace trussopt
