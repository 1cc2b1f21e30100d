#include "maxmin/suppvec.hpp"

#include <algorithm>
#include <cmath>

#include "maxmin/errors.hpp"
#include "maxmin/linalg.hpp"

namespace maxmin {

namespace {

constexpr double kEqualNormTol = 1e-12;  // absolute, on ||a1|| - ||a2||

std::size_t common_cols(const std::vector<DenseMatrix>& matrices) {
  if (matrices.empty()) {
    throw ArgumentError("supporting_vectors: matrix list is empty");
  }
  const std::size_t n = matrices.front().cols();
  for (const auto& m : matrices) {
    if (m.cols() != n) {
      throw DimensionError(
          "supporting_vectors: matrices must share a column count");
    }
    if (!m.is_finite()) {
      throw ArgumentError("supporting_vectors: entries must be finite");
    }
  }
  return n;
}

// sum_i A_i^T A_i, accumulated symmetrically.
DenseMatrix gram_sum(const std::vector<DenseMatrix>& matrices, std::size_t n) {
  DenseMatrix s(n, n);
  for (const auto& m : matrices) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, j) * m(i, k);
        s(j, k) += acc;
        if (k != j) s(k, j) += acc;
      }
    }
  }
  return s;
}

SuppVecResult solve_general(const std::vector<DenseMatrix>& matrices,
                            std::size_t n, const ToleranceConfig& tol) {
  EigMaxResult eig = sym_eig_max(gram_sum(matrices, n), tol);
  SuppVecResult out;
  out.lambda_max = std::max(0.0, eig.lambda_max);  // Gram sums are PSD
  out.basis = std::move(eig.basis);
  out.used_special_case = false;
  return out;
}

}  // namespace

SuppVecResult supporting_vectors(const std::vector<DenseMatrix>& matrices,
                                 const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = common_cols(matrices);
  if (matrices.size() == 1 && n == 2) {
    const DenseMatrix& m = matrices.front();
    const std::vector<double> a1 = m.col(0);
    const std::vector<double> a2 = m.col(1);
    if (std::abs(norm2(a1) - norm2(a2)) < kEqualNormTol) {
      const double d = dot(a1, a2);
      SuppVecResult out;
      out.lambda_max = dot(a1, a1) + std::abs(d);
      out.used_special_case = true;
      // Eigenvalues of M^T M are ||a1||^2 +- a1.a2; the same multiplicity
      // rule as the general branch decides whether both merge into the top
      // eigenspace.
      const double gap = 2.0 * std::abs(d);
      if (gap <= tol.eig_multiplicity_tol * std::max(1.0, out.lambda_max)) {
        out.basis = DenseMatrix::identity(2);
      } else {
        const double h = std::sqrt(0.5);
        out.basis = d > 0.0 ? DenseMatrix{{h}, {h}} : DenseMatrix{{h}, {-h}};
      }
      return out;
    }
  }
  return solve_general(matrices, n, tol);
}

SuppVecResult supporting_vectors_general(
    const std::vector<DenseMatrix>& matrices, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = common_cols(matrices);
  return solve_general(matrices, n, tol);
}

}  // namespace maxmin
