#include "trussopt/truss_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trussopt {

namespace {

constexpr double kMinLength = 1e-12;

bool finite3(const Vec3& v) {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

double distance(const Vec3& a, const Vec3& b) {
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];
    const double dz = b[2] - a[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

template <typename T>
void check_ids(const std::vector<T>& items, const char* what, ValidationReport& report) {
    std::vector<int> seen(items.size(), 0);
    bool contiguous = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const std::size_t id = items[i].id;
        if (id < items.size() && seen[id]++ > 0) {
            report.issues.push_back({IssueKind::DuplicateId,
                                     std::string("duplicate ") + what + " id " + std::to_string(id)});
        }
        if (id != i) contiguous = false;
    }
    if (!contiguous) {
        report.issues.push_back({IssueKind::NonContiguousId,
                                 std::string(what) + " ids must be 0..n-1 in storage order"});
    }
}

}  // namespace

const char* to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::DuplicateId: return "DuplicateId";
        case IssueKind::NonContiguousId: return "NonContiguousId";
        case IssueKind::NonFiniteValue: return "NonFiniteValue";
        case IssueKind::DanglingReference: return "DanglingReference";
        case IssueKind::SelfLoop: return "SelfLoop";
        case IssueKind::ZeroLengthElement: return "ZeroLengthElement";
        case IssueKind::EmptyGroup: return "EmptyGroup";
        case IssueKind::InvalidBounds: return "InvalidBounds";
        case IssueKind::NonPositiveLimit: return "NonPositiveLimit";
        case IssueKind::EmptyLoadCase: return "EmptyLoadCase";
        case IssueKind::NoFreeDofs: return "NoFreeDofs";
    }
    return "Unknown";
}

bool ValidationReport::has(IssueKind kind) const {
    return std::any_of(issues.begin(), issues.end(),
                       [kind](const ValidationIssue& i) { return i.kind == kind; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << to_string(issues[i].kind) << ": " << issues[i].message;
    }
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid model: " + report.summary()), report_(std::move(report)) {}

ValidationReport check_model(const TrussModel& model) {
    ValidationReport report;
    auto add = [&report](IssueKind kind, std::string msg) {
        report.issues.push_back({kind, std::move(msg)});
    };
    const std::size_t n_nodes = model.nodes.size();
    const std::size_t n_groups = model.groups.size();

    check_ids(model.nodes, "node", report);
    check_ids(model.elements, "element", report);
    check_ids(model.groups, "group", report);

    for (const Node& node : model.nodes) {
        if (!finite3(node.coords)) {
            add(IssueKind::NonFiniteValue, "node " + std::to_string(node.id) + " has non-finite coordinates");
        }
    }

    bool dangling = false;
    std::vector<std::size_t> group_members(n_groups, 0);
    for (std::size_t e = 0; e < model.elements.size(); ++e) {
        const Element& el = model.elements[e];
        const std::string tag = "element " + std::to_string(el.id);
        const bool a_ok = el.node_a < n_nodes;
        const bool b_ok = el.node_b < n_nodes;
        if (!a_ok || !b_ok) {
            dangling = true;
            add(IssueKind::DanglingReference,
                tag + " references node " + std::to_string(a_ok ? el.node_b : el.node_a) +
                    " of a " + std::to_string(n_nodes) + "-node table");
        }
        if (el.node_a == el.node_b) {
            add(IssueKind::SelfLoop, tag + " connects node " + std::to_string(el.node_a) + " to itself");
        }
        if (a_ok && b_ok &&
            !(distance(model.nodes[el.node_a].coords, model.nodes[el.node_b].coords) >= kMinLength)) {
            add(IssueKind::ZeroLengthElement, tag + " has zero length");
        }
        if (el.group < n_groups) {
            ++group_members[el.group];
        } else {
            dangling = true;
            add(IssueKind::DanglingReference, tag + " references missing group " + std::to_string(el.group));
        }
    }

    for (std::size_t g = 0; g < n_groups; ++g) {
        const MemberGroup& grp = model.groups[g];
        const std::string tag = "group " + std::to_string(grp.id);
        if (group_members[g] == 0) add(IssueKind::EmptyGroup, tag + " has no elements");
        if (!(grp.area_min > 0.0) || !(grp.area_min <= grp.area_max) || !std::isfinite(grp.area_max)) {
            add(IssueKind::InvalidBounds, tag + " needs 0 < area_min <= area_max");
        }
        if (!(grp.stress_tension_limit > 0.0) || !(grp.stress_compression_limit > 0.0)) {
            add(IssueKind::NonPositiveLimit, tag + " stress limits must be positive");
        }
        if (grp.buckling && !(grp.buckling->k > 0.0)) {
            add(IssueKind::NonPositiveLimit, tag + " buckling constant must be positive");
        }
    }

    if (!(model.material.elastic_modulus > 0.0) || !(model.material.weight_density > 0.0)) {
        add(IssueKind::NonPositiveLimit, "material constants must be positive");
    }

    for (const SupportSpec& s : model.supports) {
        if (s.node >= n_nodes) {
            dangling = true;
            add(IssueKind::DanglingReference, "support references missing node " + std::to_string(s.node));
        }
    }

    for (const LoadCase& lc : model.load_cases) {
        const std::string tag = "load case " + std::to_string(lc.id);
        bool nonzero = false;
        for (const PointLoad& p : lc.point_loads) {
            if (p.node >= n_nodes) {
                dangling = true;
                add(IssueKind::DanglingReference, tag + " loads missing node " + std::to_string(p.node));
            }
            if (!finite3(p.force)) add(IssueKind::NonFiniteValue, tag + " has a non-finite force");
            if (p.force[0] != 0.0 || p.force[1] != 0.0 || p.force[2] != 0.0) nonzero = true;
        }
        if (!nonzero) add(IssueKind::EmptyLoadCase, tag + " has no nonzero load");
    }

    for (const DisplacementLimit& d : model.displacement_limits) {
        if (!(d.limit > 0.0)) add(IssueKind::NonPositiveLimit, "displacement limit must be positive");
        for (std::size_t n : d.nodes) {
            if (n >= n_nodes) {
                dangling = true;
                add(IssueKind::DanglingReference, "displacement limit references missing node " + std::to_string(n));
            }
        }
    }

    if (!dangling && build_dof_map(model).num_free == 0) {
        add(IssueKind::NoFreeDofs, "model has no free degrees of freedom");
    }
    return report;
}

const TrussModel& validate(const TrussModel& model) {
    ValidationReport report = check_model(model);
    if (!report.ok()) throw ValidationError(std::move(report));
    return model;
}

DofMap build_dof_map(const TrussModel& model) {
    const std::size_t n = model.nodes.size();
    std::vector<std::array<bool, 3>> fixed(n, {false, false, false});
    std::vector<std::array<bool, 3>> stiff(n, {false, false, false});
    for (const SupportSpec& s : model.supports) {
        if (s.node >= n) continue;
        for (std::size_t a = 0; a < 3; ++a) fixed[s.node][a] = fixed[s.node][a] || s.fixed.contains(a);
    }
    for (const Element& el : model.elements) {
        if (el.node_a >= n || el.node_b >= n) continue;
        const Vec3& pa = model.nodes[el.node_a].coords;
        const Vec3& pb = model.nodes[el.node_b].coords;
        const double len = distance(pa, pb);
        if (!(len >= kMinLength)) continue;
        for (std::size_t a = 0; a < 3; ++a) {
            if (std::abs(pb[a] - pa[a]) > 1e-12 * len) {
                stiff[el.node_a][a] = true;
                stiff[el.node_b][a] = true;
            }
        }
    }
    DofMap map;
    map.index.assign(n, {DofMap::kFixed, DofMap::kFixed, DofMap::kFixed});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < 3; ++a) {
            if (!fixed[i][a] && stiff[i][a]) {
                map.index[i][a] = static_cast<std::ptrdiff_t>(map.num_free++);
            }
        }
    }
    return map;
}

DesignVector clamp_to_bounds(const TrussModel& model, DesignVector design) {
    if (design.size() != model.groups.size()) {
        throw DimensionMismatch("design has " + std::to_string(design.size()) + " areas, model has " +
                                std::to_string(model.groups.size()) + " groups");
    }
    for (std::size_t g = 0; g < design.size(); ++g) {
        design[g] = std::clamp(design[g], model.groups[g].area_min, model.groups[g].area_max);
    }
    return design;
}

std::vector<double> expand_areas(const TrussModel& model, const DesignVector& design) {
    if (design.size() != model.groups.size()) {
        throw DimensionMismatch("design size does not match the number of groups");
    }
    std::vector<double> areas(model.elements.size());
    for (std::size_t e = 0; e < areas.size(); ++e) areas[e] = design[model.elements[e].group];
    return areas;
}

DesignVector lower_bounds(const TrussModel& model) {
    DesignVector v;
    for (const MemberGroup& g : model.groups) v.areas.push_back(g.area_min);
    return v;
}

DesignVector upper_bounds(const TrussModel& model) {
    DesignVector v;
    for (const MemberGroup& g : model.groups) v.areas.push_back(g.area_max);
    return v;
}

}  // namespace trussopt
