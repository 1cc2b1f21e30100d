#include "maxmin/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

constexpr double kSymmetryRelTol = 1e-12;

Eigen::MatrixXd to_eigen(const DenseMatrix& m, const char* op) {
  if (!m.is_finite()) {
    throw ArgumentError(std::string(op) + ": entries must be finite");
  }
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& e) {
  DenseMatrix m(static_cast<std::size_t>(e.rows()),
                static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    }
  }
  return m;
}

// Flip each column so its first component of largest magnitude is positive.
void sign_normalize_columns(Eigen::MatrixXd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = std::abs(v(0, j));
    for (Eigen::Index i = 1; i < v.rows(); ++i) {
      if (std::abs(v(i, j)) > best) {
        best = std::abs(v(i, j));
        imax = i;
      }
    }
    if (v(imax, j) < 0.0) v.col(j) = -v.col(j);
  }
}

// Symmetry gate shared by sym_eig_max and cholesky: small asymmetry is
// symmetrized away (Gram accumulation leaves harmless asymmetry), larger
// asymmetry is rejected.
Eigen::MatrixXd require_symmetric(const DenseMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(op) + ": matrix must be square");
  }
  Eigen::MatrixXd e = to_eigen(m, op);
  const double asym = (e - e.transpose()).norm();
  if (asym > kSymmetryRelTol * std::max(1.0, e.norm())) {
    throw DimensionError(std::string(op) + ": matrix is not symmetric");
  }
  return 0.5 * (e + e.transpose());
}

}  // namespace

EigMaxResult sym_eig_max(const DenseMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  Eigen::MatrixXd s = require_symmetric(m, "sym_eig_max");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success) {
    throw ArgumentError("sym_eig_max: eigendecomposition failed");
  }
  const Eigen::Index n = s.rows();
  const double lambda_max = es.eigenvalues()(n - 1);
  const double thr = tol.eig_multiplicity_tol * std::max(1.0, std::abs(lambda_max));
  Eigen::Index first = n - 1;
  while (first > 0 && std::abs(es.eigenvalues()(first - 1) - lambda_max) <= thr) {
    --first;
  }
  Eigen::MatrixXd basis = es.eigenvectors().rightCols(n - first);
  sign_normalize_columns(basis);
  return {lambda_max, from_eigen(basis)};
}

DenseMatrix pseudoinverse(const DenseMatrix& b, const ToleranceConfig& tol) {
  tol.validate();
  if (b.empty()) return DenseMatrix(b.cols(), b.rows());
  Eigen::MatrixXd e = to_eigen(b, "pseudoinverse");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      e, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double cut = tol.rank_tol_for(b.rows(), b.cols()) * sigma(0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) inv(i) = 1.0 / sigma(i);
  }
  Eigen::MatrixXd pinv =
      svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  return from_eigen(pinv);
}

DenseMatrix cholesky(const DenseMatrix& l, const ToleranceConfig& tol) {
  tol.validate();
  Eigen::MatrixXd s = require_symmetric(l, "cholesky");
  const std::size_t n = l.rows();
  const double floor = tol.spd_tol * s.norm();
  DenseMatrix c(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= c(k, j) * c(k, j);
    if (!(d > floor)) {
      throw DefinitenessError(
          "cholesky: pivot " + std::to_string(j) + " is not positive (" +
              std::to_string(d) + "); matrix is not positive definite",
          j);
    }
    c(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(j, i);
      for (std::size_t k = 0; k < j; ++k) v -= c(k, j) * c(k, i);
      c(j, i) = v / c(j, j);
    }
  }
  return c;
}

ColumnSelection cols_indep(const DenseMatrix& d, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t r = rank_of(d, tol);
  ColumnSelection out;
  if (r == 0) {
    out.selected = DenseMatrix(d.rows(), 0);
    return out;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(to_eigen(d, "cols_indep"));
  const auto& pivots = qr.colsPermutation().indices();
  out.indices.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    out.indices.push_back(static_cast<std::size_t>(pivots(static_cast<Eigen::Index>(k))));
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.selected = d.select_columns(out.indices);
  return out;
}

DenseMatrix null_space(const DenseMatrix& b, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = b.cols();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(b, "null_space"),
                                        Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double cut =
      sigma.size() > 0 ? tol.rank_tol_for(b.rows(), b.cols()) * sigma(0) : 0.0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++r;
  }
  Eigen::MatrixXd kernel =
      svd.matrixV().rightCols(static_cast<Eigen::Index>(n - r));
  sign_normalize_columns(kernel);
  return from_eigen(kernel);
}

std::size_t rank_of(const DenseMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m, "rank_of"));
  const auto& sigma = svd.singularValues();
  const double cut = tol.rank_tol_for(m.rows(), m.cols()) * sigma(0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++r;
  }
  return r;
}

}  // namespace maxmin
