#pragma once

#include <string>
#include <vector>

#include "maxmin/dense_matrix.hpp"
#include "maxmin/solver.hpp"

namespace maxmin {

struct Standardized {
  DenseMatrix z;                // column means 0, sample std 1
  std::vector<double> means;
  std::vector<double> stds;     // sample convention, divisor rows - 1
};

/// Columnwise z-scores with the sample (n-1) standard deviation. Needs at
/// least two rows; a zero-variance column raises DegenerateColumnError.
Standardized standardize_columns(const DenseMatrix& m);

/// Named sites with winter/summer triples (high temperature in Celsius,
/// radiation in MJ/m^2, evapotranspiration in mm/day).
struct GeoDataset {
  std::vector<std::string> site_names;
  DenseMatrix winter;  // sites x 3
  DenseMatrix summer;  // sites x 3
};

struct GeoSiteScore {
  std::string name;
  double ax = 0.0;     // standardized winter reading a_i . x
  double bx = 0.0;     // standardized summer reading b_i . x
  double score = 0.0;  // (ax - bx) / sqrt(2)
};

struct GeoScoreReport {
  std::vector<double> weights;          // the solved x, size 3
  std::vector<GeoSiteScore> per_site;   // input order
  std::vector<std::string> ranking;     // by score descending, ties stable
};

/// Seasonal scoring pipeline: standardize both seasons, solve
/// max ||A x|| s.t. ||B x||^2 + ||x||^2 <= 1 via the stacked operator
/// D = (B; I_3), and project each site's (ax, bx) point onto the direction
/// (1, -1)/sqrt(2), so high score = desirable winter and mild summer.
///
/// The weight vector's global sign is fixed so the mean raw winter reading
/// (raw column means dotted with x) is nonnegative; the standardized
/// site-mean of ax is identically zero, so it cannot orient the solution.
GeoScoreReport solve_geolocation(const GeoDataset& data,
                                 const ToleranceConfig& tol = {});

/// Energy-constrained field maximization: maximize ||E1 psi|| subject to
/// ||E2 psi||^2 + psi^T L psi <= 1, by lifting the quadratic term with the
/// Cholesky factor C of L and stacking D = (E2; C). C invertible forces
/// ker(D) = {0}, so this is always a Case-1 solve.
MaxminSolution solve_quadratic_energy(const DenseMatrix& e1,
                                      const DenseMatrix& e2,
                                      const DenseMatrix& l,
                                      const ToleranceConfig& tol = {});

/// The packaged 16-site Andalusian climate dataset (also shipped as
/// data/andalusia_climate.csv).
const GeoDataset& andalusia_fixture();

}  // namespace maxmin
