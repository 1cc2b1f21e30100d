#pragma once

#include "json.hpp"
#include "maxmin/apps.hpp"
#include "maxmin/solver.hpp"
#include "maxmin/suppvec.hpp"

namespace maxmin {

/// Top-level object with optimal_value, solutions (array of arrays),
/// case_used, selected_indices, lambda_max, tolerances and diagnostics.
/// Doubles round-trip exactly through the serialization.
nlohmann::json solution_to_json(const MaxminSolution& sol,
                                const ToleranceConfig& tol);

/// lambda_max, basis columns (array of vectors), used_special_case.
nlohmann::json suppvec_to_json(const SuppVecResult& result,
                               const ToleranceConfig& tol);

/// weights, per-site rows (name/ax/bx/score) and the ranking.
nlohmann::json geo_report_to_json(const GeoScoreReport& report);

}  // namespace maxmin
