#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "trussopt/constraints.hpp"
#include "trussopt/hybrid.hpp"

namespace trussopt {

/// Parses a JSON model document and validates the result.
/// Throws ParseError (with a JSON pointer or line/column location) or
/// ValidationError.
TrussModel parse_model(std::string_view text);

/// Reads and parses a model file; a missing file is a ParseError located at
/// the path.
TrussModel load_model_file(const std::filesystem::path& path);

std::string serialize_model(const TrussModel& model);

/// Weight, feasibility and every constraint with its margin (1 - ratio).
std::string design_report(const TrussModel& model, const DesignVector& design, double slack = 0.0);

/// Result document of an optimization run: best feasible design (or the best
/// penalized one if none is feasible) with its constraint report.
std::string run_result_document(const TrussModel& model, const RunRecord& record, std::uint64_t seed);

/// Header: generation,best_F,mean_F,best_feasible_weight,evaluations,sa_ran
std::string convergence_csv(const RunRecord& record);

}  // namespace trussopt
