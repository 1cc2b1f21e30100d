#pragma once

#include <vector>

#include "maxmin/dense_matrix.hpp"

namespace maxmin {

/// Solution of max sum_i ||A_i x||^2 over the unit sphere.
struct SuppVecResult {
  /// Largest eigenvalue of sum_i A_i^T A_i (the optimal squared value).
  double lambda_max = 0.0;
  /// Orthonormal columns spanning its eigenspace; every unit vector in the
  /// span attains lambda_max. Sign/order conventions follow sym_eig_max.
  DenseMatrix basis;
  bool used_special_case = false;
};

/// Supporting vectors of a single matrix, or generalized supporting vectors
/// of a family with a common column count.
///
/// A single m-by-2 matrix whose columns have equal norms (within 1e-12
/// absolute) takes the closed-form branch: lambda_max = ||a1||^2 + |a1.a2|
/// with basis {e1, e2} when the top eigenvalue is (numerically) double, and
/// the normalized diagonal (1, +-1)/sqrt(2) otherwise. The branch agrees
/// with the general eigendecomposition within tolerance.
SuppVecResult supporting_vectors(const std::vector<DenseMatrix>& matrices,
                                 const ToleranceConfig& tol = {});

/// The eigendecomposition branch only, with the closed-form fast path
/// disabled; used to validate the special case against the general one.
SuppVecResult supporting_vectors_general(
    const std::vector<DenseMatrix>& matrices, const ToleranceConfig& tol = {});

}  // namespace maxmin
