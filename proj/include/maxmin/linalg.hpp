#pragma once

#include <cstddef>
#include <vector>

#include "maxmin/dense_matrix.hpp"

namespace maxmin {

struct EigMaxResult {
  double lambda_max = 0.0;
  /// Orthonormal columns spanning the eigenspace of lambda_max. Columns are
  /// sign-normalized (first component of largest magnitude is positive) and
  /// kept in eigendecomposition order, so the output is deterministic.
  DenseMatrix basis;
};

/// Largest eigenvalue and its eigenspace for a symmetric matrix.
///
/// Eigenvalues within eig_multiplicity_tol * max(1, |lambda_max|) of the top
/// one are merged into the returned eigenspace. Input asymmetry below 1e-12
/// relative is symmetrized away; anything larger is a DimensionError.
EigMaxResult sym_eig_max(const DenseMatrix& m, const ToleranceConfig& tol = {});

/// Moore-Penrose inverse via SVD, truncating singular values at
/// rank_rel_tol * sigma_max. Satisfies the four Penrose identities within
/// that truncation.
DenseMatrix pseudoinverse(const DenseMatrix& b, const ToleranceConfig& tol = {});

/// Upper-triangular C with C^T C = L for symmetric positive definite L.
/// A pivot at or below spd_tol * ||L||_F raises DefinitenessError naming
/// the failing pivot index.
DenseMatrix cholesky(const DenseMatrix& l, const ToleranceConfig& tol = {});

struct ColumnSelection {
  DenseMatrix selected;               // the chosen columns, in index order
  std::vector<std::size_t> indices;   // ascending, length = rank
};

/// Rank-revealing column subset: pivoted QR chooses rank(D) linearly
/// independent columns spanning the column space; indices are returned
/// sorted ascending.
ColumnSelection cols_indep(const DenseMatrix& d, const ToleranceConfig& tol = {});

/// Orthonormal basis of ker(B); zero columns when the kernel is trivial.
DenseMatrix null_space(const DenseMatrix& b, const ToleranceConfig& tol = {});

/// Number of singular values above rank_rel_tol * sigma_max.
std::size_t rank_of(const DenseMatrix& m, const ToleranceConfig& tol = {});

}  // namespace maxmin
