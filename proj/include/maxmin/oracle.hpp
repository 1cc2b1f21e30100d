#pragma once

#include <cstdint>
#include <vector>

#include "maxmin/dense_matrix.hpp"

// Verification oracles for the maxmin solver. These deliberately avoid the
// solver/suppvec code paths: the generalized eigenvalue route reduces the
// pencil with a Cholesky factor of B^T B and runs its own Jacobi iteration,
// and the sampling route brute-forces the ratio ||Ax|| / ||Bx||.
namespace maxmin::oracle {

/// sqrt of the largest lambda with A^T A x = lambda B^T B x. Requires
/// B^T B positive definite; raises DefinitenessError otherwise.
double generalized_eig_value(const DenseMatrix& a, const DenseMatrix& b,
                             const ToleranceConfig& tol = {});

inline constexpr std::uint64_t kDefaultSeed = 424242;

struct SphereSample {
  /// Best ratio found: a certified lower bound on the optimal value.
  double value_lower_bound = 0.0;
  /// The attaining point, scaled to ||B x|| = 1 (zeros when nothing
  /// feasible was sampled).
  std::vector<double> best_x;
  std::uint64_t seed = kDefaultSeed;
};

/// Randomized lower bound: draws `samples` directions, normalizes each to
/// ||Bx|| = 1 (skipping Bx ~ 0), then runs `refine_steps` rounds of
/// coordinate-wise hill climbing on the ratio with a halving step size.
/// Deterministic for a fixed seed.
SphereSample sphere_sampling(const DenseMatrix& a, const DenseMatrix& b,
                             std::size_t samples, std::size_t refine_steps,
                             std::uint64_t seed = kDefaultSeed);

}  // namespace maxmin::oracle
