#include "maxmin/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "maxmin/errors.hpp"
#include "maxmin/linalg.hpp"

namespace maxmin {

Standardized standardize_columns(const DenseMatrix& m) {
  if (m.rows() < 2) {
    throw ArgumentError("standardize_columns: need at least two rows");
  }
  if (!m.is_finite()) {
    throw ArgumentError("standardize_columns: entries must be finite");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Standardized out;
  out.z = DenseMatrix(rows, cols);
  out.means.resize(cols);
  out.stds.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += m(i, j);
    const double mean = sum / static_cast<double>(rows);
    double ss = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double d = m(i, j) - mean;
      ss += d * d;
    }
    const double std_dev = std::sqrt(ss / static_cast<double>(rows - 1));
    if (std_dev <= 1e-12 * std::max(1.0, std::abs(mean))) {
      throw DegenerateColumnError(
          "standardize_columns: column " + std::to_string(j) +
              " has zero variance",
          j);
    }
    out.means[j] = mean;
    out.stds[j] = std_dev;
    for (std::size_t i = 0; i < rows; ++i) {
      out.z(i, j) = (m(i, j) - mean) / std_dev;
    }
  }
  return out;
}

GeoScoreReport solve_geolocation(const GeoDataset& data,
                                 const ToleranceConfig& tol) {
  const std::size_t sites = data.site_names.size();
  if (data.winter.rows() != sites || data.summer.rows() != sites) {
    throw DimensionError("solve_geolocation: row count must match site names");
  }
  if (data.winter.cols() != 3 || data.summer.cols() != 3) {
    throw DimensionError("solve_geolocation: expected 3 variables per season");
  }
  const Standardized winter = standardize_columns(data.winter);
  const Standardized summer = standardize_columns(data.summer);
  const DenseMatrix stacked =
      stack_operators({summer.z, DenseMatrix::identity(3)});
  const MaxminSolution sol = solve_case1(winter.z, stacked, tol);

  std::vector<double> x = sol.solutions.front();
  // Standardized columns have zero site-mean, so the mean of Ax cannot fix
  // the sign; orient against the raw winter means instead ("more winter"
  // reads positive).
  if (dot(winter.means, x) < 0.0) {
    for (double& v : x) v = -v;
  }

  GeoScoreReport report;
  report.weights = x;
  report.per_site.reserve(sites);
  const double half_diag = std::sqrt(0.5);
  for (std::size_t i = 0; i < sites; ++i) {
    GeoSiteScore s;
    s.name = data.site_names[i];
    s.ax = dot(winter.z.row(i), x);
    s.bx = dot(summer.z.row(i), x);
    s.score = (s.ax - s.bx) * half_diag;
    report.per_site.push_back(std::move(s));
  }
  std::vector<std::size_t> order(sites);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return report.per_site[lhs].score >
                            report.per_site[rhs].score;
                   });
  report.ranking.reserve(sites);
  for (std::size_t i : order) report.ranking.push_back(data.site_names[i]);
  return report;
}

MaxminSolution solve_quadratic_energy(const DenseMatrix& e1,
                                      const DenseMatrix& e2,
                                      const DenseMatrix& l,
                                      const ToleranceConfig& tol) {
  if (e1.cols() != e2.cols() || e1.cols() != l.cols() || l.rows() != l.cols()) {
    throw DimensionError(
        "solve_quadratic_energy: E1, E2 and L must act on the same space");
  }
  const DenseMatrix chol = cholesky(l, tol);
  return solve_case1(e1, stack_operators({e2, chol}), tol);
}

}  // namespace maxmin
