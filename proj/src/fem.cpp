#include "trussopt/fem.hpp"

#include <cmath>
#include <string>

namespace trussopt {

double element_length(const TrussModel& model, const Element& element) {
    const Vec3& a = model.nodes.at(element.node_a).coords;
    const Vec3& b = model.nodes.at(element.node_b).coords;
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    const double dz = b[2] - a[2];
    const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(len >= 1e-12)) {
        throw ZeroLengthElement("element " + std::to_string(element.id) + " has zero length");
    }
    return len;
}

double structure_weight(const TrussModel& model, const DesignVector& design) {
    if (design.size() != model.groups.size()) throw DimensionMismatch("design size does not match groups");
    double sum = 0.0;
    for (const Element& el : model.elements) sum += design[el.group] * element_length(model, el);
    return model.material.weight_density * sum;
}

StiffnessSystem assemble_global_stiffness(const TrussModel& model, const DesignVector& design) {
    TrussAnalyzer analyzer(model);
    return {analyzer.dofs(), analyzer.stiffness(design)};
}

LoadCaseResult solve_load_case(const TrussModel& model, const DesignVector& design, const LoadCase& load_case) {
    TrussAnalyzer analyzer(model);
    return std::move(analyzer.analyze(design, {load_case}).cases.front());
}

AnalysisResult analyze(const TrussModel& model, const DesignVector& design) {
    return TrussAnalyzer(model).analyze(design);
}

double buckling_stress_limit(const TrussModel& model, const Element& element, double area) {
    const MemberGroup& group = model.groups.at(element.group);
    if (!group.buckling) {
        throw BucklingNotEnabled("group " + std::to_string(group.id) + " has no buckling constant");
    }
    const double len = element_length(model, element);
    return -group.buckling->k * model.material.elastic_modulus * area / (len * len);
}

TrussAnalyzer::TrussAnalyzer(const TrussModel& model) : model_(&model), dofs_(build_dof_map(model)) {
    lengths_.reserve(model.elements.size());
    directions_.reserve(model.elements.size());
    for (const Element& el : model.elements) {
        const double len = element_length(model, el);
        const Vec3& a = model.nodes[el.node_a].coords;
        const Vec3& b = model.nodes[el.node_b].coords;
        lengths_.push_back(len);
        directions_.push_back({(b[0] - a[0]) / len, (b[1] - a[1]) / len, (b[2] - a[2]) / len});
    }
}

double TrussAnalyzer::weight(const DesignVector& design) const {
    if (design.size() != model_->groups.size()) throw DimensionMismatch("design size does not match groups");
    double sum = 0.0;
    for (std::size_t e = 0; e < lengths_.size(); ++e) sum += design[model_->elements[e].group] * lengths_[e];
    return model_->material.weight_density * sum;
}

Eigen::MatrixXd TrussAnalyzer::stiffness(const DesignVector& design) const {
    if (design.size() != model_->groups.size()) throw DimensionMismatch("design size does not match groups");
    const auto n = static_cast<Eigen::Index>(dofs_.num_free);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    const double modulus = model_->material.elastic_modulus;
    std::array<std::ptrdiff_t, 6> eq{};
    std::array<double, 6> dir{};
    for (std::size_t e = 0; e < lengths_.size(); ++e) {
        const Element& el = model_->elements[e];
        const double ke = modulus * design[el.group] / lengths_[e];
        for (std::size_t a = 0; a < 3; ++a) {
            eq[a] = dofs_(el.node_a, a);
            eq[a + 3] = dofs_(el.node_b, a);
            dir[a] = -directions_[e][a];
            dir[a + 3] = directions_[e][a];
        }
        // k_e = ke * g g^T with g = [-d, d]; each pair is added once to both
        // triangles so the result is exactly symmetric.
        for (std::size_t i = 0; i < 6; ++i) {
            if (eq[i] < 0) continue;
            for (std::size_t j = 0; j < 6; ++j) {
                if (eq[j] < 0) continue;
                k(eq[i], eq[j]) += ke * dir[i] * dir[j];
            }
        }
    }
    return k;
}

AnalysisResult TrussAnalyzer::analyze(const DesignVector& design) const {
    return analyze(design, model_->load_cases);
}

AnalysisResult TrussAnalyzer::analyze(const DesignVector& design, const std::vector<LoadCase>& cases) const {
    const TrussModel& model = *model_;
    const std::size_t n_nodes = model.nodes.size();
    const auto n = static_cast<Eigen::Index>(dofs_.num_free);

    AnalysisResult result;
    result.design = design;
    result.weight = weight(design);

    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(cases.size()));
    for (std::size_t c = 0; c < cases.size(); ++c) {
        for (const PointLoad& p : cases[c].point_loads) {
            for (std::size_t a = 0; a < 3; ++a) {
                if (p.force[a] == 0.0) continue;
                const std::ptrdiff_t q = dofs_(p.node, a);
                if (q < 0) {
                    // A support reaction absorbs loads on fixed dofs; a load on
                    // a dof no member can resist has no equilibrium solution.
                    bool supported = false;
                    for (const SupportSpec& s : model.supports) {
                        if (s.node == p.node && s.fixed.contains(a)) supported = true;
                    }
                    if (!supported) {
                        throw SingularStructure("load on node " + std::to_string(p.node) +
                                                " acts along a dof with no stiffness");
                    }
                    continue;
                }
                rhs(q, static_cast<Eigen::Index>(c)) += p.force[a];
            }
        }
    }

    Eigen::MatrixXd u(n, rhs.cols());
    if (n > 0) {
        const Eigen::MatrixXd k = stiffness(design);
        const double max_diag = k.diagonal().maxCoeff();
        Eigen::LLT<Eigen::MatrixXd> llt(k);
        if (llt.info() != Eigen::Success || !(max_diag > 0.0)) {
            throw SingularStructure("stiffness matrix is not positive definite");
        }
        const auto l = llt.matrixLLT().diagonal();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!(l(i) * l(i) >= kPivotTolerance * max_diag)) {
                throw SingularStructure("pivot below tolerance at equation " + std::to_string(i));
            }
        }
        u = llt.solve(rhs);
    }

    const double modulus = model.material.elastic_modulus;
    result.cases.resize(cases.size());
    for (std::size_t c = 0; c < cases.size(); ++c) {
        LoadCaseResult& out = result.cases[c];
        out.displacements.assign(n_nodes, Vec3{0.0, 0.0, 0.0});
        for (std::size_t i = 0; i < n_nodes; ++i) {
            for (std::size_t a = 0; a < 3; ++a) {
                const std::ptrdiff_t q = dofs_(i, a);
                if (q >= 0) out.displacements[i][a] = u(q, static_cast<Eigen::Index>(c));
            }
        }
        out.stresses.resize(model.elements.size());
        for (std::size_t e = 0; e < model.elements.size(); ++e) {
            const Element& el = model.elements[e];
            const Vec3& ua = out.displacements[el.node_a];
            const Vec3& ub = out.displacements[el.node_b];
            const Vec3& d = directions_[e];
            const double elongation = d[0] * (ub[0] - ua[0]) + d[1] * (ub[1] - ua[1]) + d[2] * (ub[2] - ua[2]);
            out.stresses[e] = modulus * elongation / lengths_[e];
        }
    }
    return result;
}

}  // namespace trussopt
