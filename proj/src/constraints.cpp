#include "trussopt/constraints.hpp"

#include <algorithm>
#include <cmath>

namespace trussopt {

namespace {

// Calls visit(instance) for every stress, buckling and displacement
// constraint of every load case.
template <typename Visitor>
void for_each_constraint(const TrussModel& model, const AnalysisResult& result, Visitor&& visit) {
    std::vector<double> buckling_bound(model.elements.size(), 0.0);
    for (std::size_t e = 0; e < model.elements.size(); ++e) {
        const Element& el = model.elements[e];
        if (model.groups[el.group].buckling) {
            buckling_bound[e] = buckling_stress_limit(model, el, result.design[el.group]);
        }
    }

    ConstraintInstance c;
    for (std::size_t lc = 0; lc < result.cases.size(); ++lc) {
        const LoadCaseResult& r = result.cases[lc];
        c.load_case = lc;
        for (std::size_t e = 0; e < model.elements.size(); ++e) {
            const Element& el = model.elements[e];
            const MemberGroup& group = model.groups[el.group];
            const double sigma = r.stresses[e];
            c.kind = ConstraintKind::Stress;
            c.index = el.id;
            c.axis = Axis::X;
            c.value = sigma;
            if (sigma > 0.0) {
                c.limit = group.stress_tension_limit;
                c.ratio = sigma / group.stress_tension_limit;
            } else {
                c.limit = -group.stress_compression_limit;
                c.ratio = -sigma / group.stress_compression_limit;
            }
            visit(c);
            if (group.buckling && sigma < 0.0) {
                c.kind = ConstraintKind::Buckling;
                c.limit = buckling_bound[e];
                c.ratio = sigma / buckling_bound[e];
                visit(c);
            }
        }
        c.kind = ConstraintKind::Displacement;
        for (const DisplacementLimit& dl : model.displacement_limits) {
            for (std::size_t node : dl.nodes) {
                for (std::size_t a = 0; a < 3; ++a) {
                    if (!dl.dofs.contains(a)) continue;
                    c.index = node;
                    c.axis = static_cast<Axis>(a);
                    c.value = r.displacements[node][a];
                    c.limit = dl.limit;
                    c.ratio = std::abs(c.value) / dl.limit;
                    visit(c);
                }
            }
        }
    }
}

}  // namespace

const char* to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::Stress: return "stress";
        case ConstraintKind::Displacement: return "displacement";
        case ConstraintKind::Buckling: return "buckling";
    }
    return "unknown";
}

double ConstraintReport::max_ratio() const {
    double m = 0.0;
    for (const ConstraintInstance& c : instances) m = std::max(m, c.ratio);
    return m;
}

PenaltyParams PenaltyParams::defaults_for(const TrussModel& model) {
    return {structure_weight(model, upper_bounds(model)), 1.0};
}

ConstraintReport evaluate_constraints(const TrussModel& model, const AnalysisResult& result) {
    ConstraintReport report;
    for_each_constraint(model, result, [&report](const ConstraintInstance& c) {
        const double s = std::max(c.ratio - 1.0, 0.0);
        report.instances.push_back(c);
        report.violations.push_back(s);
        report.total += s;
    });
    report.feasible = report.total == 0.0;
    return report;
}

double violation_total(const TrussModel& model, const AnalysisResult& result) {
    double total = 0.0;
    for_each_constraint(model, result, [&total](const ConstraintInstance& c) {
        total += std::max(c.ratio - 1.0, 0.0);
    });
    return total;
}

double penalty(double violation_total, const PenaltyParams& params, std::size_t iteration) {
    if (violation_total == 0.0) return 0.0;
    return params.alpha * std::pow(static_cast<double>(iteration), params.beta_exp) * violation_total;
}

double penalty(const ConstraintReport& report, const PenaltyParams& params, std::size_t iteration) {
    return penalty(report.total, params, iteration);
}

double penalized_objective(double weight, double violation_total, const PenaltyParams& params,
                           std::size_t iteration) {
    return weight + penalty(violation_total, params, iteration);
}

double penalized_objective(double weight, const ConstraintReport& report, const PenaltyParams& params,
                           std::size_t iteration) {
    return penalized_objective(weight, report.total, params, iteration);
}

}  // namespace trussopt
