#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trussopt/errors.hpp"

namespace trussopt {

// Units throughout: in, in^2, kips, ksi, lb.

using Vec3 = std::array<double, 3>;

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Subset of {x, y, z}.
struct AxisSet {
    bool x = false;
    bool y = false;
    bool z = false;

    static constexpr AxisSet all() { return {true, true, true}; }
    static constexpr AxisSet xy() { return {true, true, false}; }

    constexpr bool contains(std::size_t axis) const {
        return axis == 0 ? x : axis == 1 ? y : z;
    }
    constexpr bool empty() const { return !x && !y && !z; }
    bool operator==(const AxisSet&) const = default;
};

struct Node {
    std::size_t id = 0;
    Vec3 coords{};
    bool operator==(const Node&) const = default;
};

struct Element {
    std::size_t id = 0;
    std::size_t node_a = 0;
    std::size_t node_b = 0;
    std::size_t group = 0;
    bool operator==(const Element&) const = default;
};

struct Buckling {
    double k = 4.0;
    bool operator==(const Buckling&) const = default;
};

/// One sizing variable shared by every element of the group. Stress limits are
/// stored as positive magnitudes.
struct MemberGroup {
    std::size_t id = 0;
    double area_min = 0.1;
    double area_max = 10.0;
    double stress_tension_limit = 25.0;
    double stress_compression_limit = 25.0;
    std::optional<Buckling> buckling;
    bool operator==(const MemberGroup&) const = default;
};

/// `weight_density` is the product rho*g in lb/in^3.
struct Material {
    double elastic_modulus = 1.0e4;
    double weight_density = 0.1;
    bool operator==(const Material&) const = default;
};

struct SupportSpec {
    std::size_t node = 0;
    AxisSet fixed;
    bool operator==(const SupportSpec&) const = default;
};

struct PointLoad {
    std::size_t node = 0;
    Vec3 force{};
    bool operator==(const PointLoad&) const = default;
};

struct LoadCase {
    std::size_t id = 0;
    std::vector<PointLoad> point_loads;
    bool operator==(const LoadCase&) const = default;
};

/// Symmetric bound |u| <= limit on the listed dofs of the listed nodes.
struct DisplacementLimit {
    std::vector<std::size_t> nodes;
    AxisSet dofs;
    double limit = 1.0;
    bool operator==(const DisplacementLimit&) const = default;
};

struct TrussModel {
    std::string name;
    std::vector<Node> nodes;
    std::vector<Element> elements;
    std::vector<MemberGroup> groups;
    Material material;
    std::vector<SupportSpec> supports;
    std::vector<LoadCase> load_cases;
    std::vector<DisplacementLimit> displacement_limits;

    std::size_t num_variables() const { return groups.size(); }
    bool operator==(const TrussModel&) const = default;
};

/// One cross-sectional area per member group, ordered by group id.
struct DesignVector {
    std::vector<double> areas;

    DesignVector() = default;
    explicit DesignVector(std::vector<double> a) : areas(std::move(a)) {}

    std::size_t size() const { return areas.size(); }
    double operator[](std::size_t i) const { return areas[i]; }
    double& operator[](std::size_t i) { return areas[i]; }
    bool operator==(const DesignVector&) const = default;
};

enum class IssueKind {
    DuplicateId,
    NonContiguousId,
    NonFiniteValue,
    DanglingReference,
    SelfLoop,
    ZeroLengthElement,
    EmptyGroup,
    InvalidBounds,
    NonPositiveLimit,
    EmptyLoadCase,
    NoFreeDofs,
};

const char* to_string(IssueKind kind);

struct ValidationIssue {
    IssueKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    bool has(IssueKind kind) const;
    std::string summary() const;
};

class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Checks every model invariant and lists all violations.
ValidationReport check_model(const TrussModel& model);

/// Returns `model` unchanged when it is valid, otherwise throws ValidationError.
const TrussModel& validate(const TrussModel& model);

/// Equation numbering of the unrestrained dofs. A dof is free when no support
/// fixes it and at least one incident element has a stiffness component along
/// it (dofs no element can resist, such as z in a planar model, are pruned).
struct DofMap {
    static constexpr std::ptrdiff_t kFixed = -1;
    std::vector<std::array<std::ptrdiff_t, 3>> index;  // per node
    std::size_t num_free = 0;

    std::ptrdiff_t operator()(std::size_t node, std::size_t axis) const {
        return index[node][axis];
    }
};

DofMap build_dof_map(const TrussModel& model);

/// Clamps every area into [area_min, area_max] of its group.
DesignVector clamp_to_bounds(const TrussModel& model, DesignVector design);

/// Per-element areas obtained by giving each element the area of its group.
std::vector<double> expand_areas(const TrussModel& model, const DesignVector& design);

DesignVector lower_bounds(const TrussModel& model);
DesignVector upper_bounds(const TrussModel& model);

}  // namespace trussopt
