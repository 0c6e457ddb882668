#pragma once

#include <cmath>

#include "trussopt/truss_model.hpp"

namespace fixtures {

using namespace trussopt;

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Bar along x from the origin, fixed at node 0, axial load at node 1.
inline TrussModel single_bar(double modulus, double area, double length, double load) {
    TrussModel m;
    m.name = "bar";
    m.material = {modulus, 0.1};
    m.nodes = {{0, {0.0, 0.0, 0.0}}, {1, {length, 0.0, 0.0}}};
    m.groups = {{0, area, area, 1e6, 1e6, std::nullopt}};
    m.elements = {{0, 0, 1, 0}};
    m.supports = {{0, AxisSet::all()}};
    m.load_cases = {{0, {{1, {load, 0.0, 0.0}}}}};
    return m;
}

// Two pinned supports at (0,0) and (span,0), apex at (span/2, rise).
inline TrussModel pitched_truss(double span, double rise, double load) {
    TrussModel m;
    m.name = "pitched";
    m.material = {1.0e4, 0.1};
    m.nodes = {{0, {0.0, 0.0, 0.0}}, {1, {span, 0.0, 0.0}}, {2, {span / 2, rise, 0.0}}};
    m.groups = {{0, 0.1, 10.0, 25.0, 25.0, std::nullopt}};
    m.elements = {{0, 0, 2, 0}, {1, 1, 2, 0}};
    m.supports = {{0, AxisSet::xy()}, {1, AxisSet::xy()}};
    m.load_cases = {{0, {{2, {0.0, load, 0.0}}}}};
    return m;
}

}  // namespace fixtures
