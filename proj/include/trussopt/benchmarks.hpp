#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trussopt/truss_model.hpp"

namespace trussopt {

/// A canonical benchmark with a published optimum for cross-checking.
struct BenchmarkEntry {
    std::string id;  // "10bar-case1", "25bar", ...
    TrussModel model;
    DesignVector reference_areas;
    double reference_weight = 0.0;  // lb
    std::string source_table;
    std::string geometry_provenance;
};

/// The eight built-in benchmarks, validated, in a fixed order.
const std::vector<BenchmarkEntry>& builtin_models();

/// Throws std::out_of_range for an unknown id.
const BenchmarkEntry& builtin(std::string_view id);

}  // namespace trussopt
