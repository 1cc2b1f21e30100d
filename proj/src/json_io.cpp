#include "maxmin/json_io.hpp"

namespace maxmin {

namespace {

nlohmann::json tolerances_json(const ToleranceConfig& tol) {
  nlohmann::json j;
  j["eig_multiplicity_tol"] = tol.eig_multiplicity_tol;
  if (tol.rank_rel_tol) {
    j["rank_rel_tol"] = *tol.rank_rel_tol;
  } else {
    j["rank_rel_tol"] = nullptr;  // default: eps * max(rows, cols)
  }
  j["range_membership_tol"] = tol.range_membership_tol;
  j["spd_tol"] = tol.spd_tol;
  return j;
}

nlohmann::json columns_json(const DenseMatrix& m) {
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return cols;
}

}  // namespace

nlohmann::json solution_to_json(const MaxminSolution& sol,
                                const ToleranceConfig& tol) {
  nlohmann::json j;
  j["optimal_value"] = sol.optimal_value;
  j["solutions"] = sol.solutions;
  j["case_used"] = sol.case_used == SolveCase::Case1 ? "Case1" : "Case2";
  j["selected_indices"] = sol.selected_indices;
  j["lambda_max"] = sol.lambda_max;
  j["tolerances"] = tolerances_json(tol);
  j["diagnostics"] = {
      {"y_candidates_total", sol.y_candidates_total},
      {"y_candidates_accepted", sol.y_candidates_accepted},
      {"degenerate", sol.degenerate},
      {"used_projection_fallback", sol.used_projection_fallback},
  };
  return j;
}

nlohmann::json suppvec_to_json(const SuppVecResult& result,
                               const ToleranceConfig& tol) {
  nlohmann::json j;
  j["lambda_max"] = result.lambda_max;
  j["basis"] = columns_json(result.basis);
  j["used_special_case"] = result.used_special_case;
  j["tolerances"] = tolerances_json(tol);
  return j;
}

nlohmann::json geo_report_to_json(const GeoScoreReport& report) {
  nlohmann::json sites = nlohmann::json::array();
  for (const auto& s : report.per_site) {
    sites.push_back({{"name", s.name},
                     {"ax", s.ax},
                     {"bx", s.bx},
                     {"score", s.score}});
  }
  return {{"weights", report.weights},
          {"sites", sites},
          {"ranking", report.ranking},
          {"std_divisor", "n-1"}};
}

}  // namespace maxmin
