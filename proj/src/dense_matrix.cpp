#include "maxmin/dense_matrix.hpp"

#include <cmath>
#include <limits>

#include "maxmin/errors.hpp"

namespace maxmin {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ArgumentError("DenseMatrix: entry count does not match shape");
  }
  if (!is_finite()) {
    throw ArgumentError("DenseMatrix: entries must be finite");
  }
}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ArgumentError("DenseMatrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (!is_finite()) {
    throw ArgumentError("DenseMatrix: entries must be finite");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> DenseMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<double> DenseMatrix::col(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::select_columns(
    std::span<const std::size_t> indices) const {
  for (std::size_t j : indices) {
    if (j >= cols_) throw ArgumentError("select_columns: index out of range");
  }
  DenseMatrix out(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < indices.size(); ++k) {
      out(i, k) = (*this)(i, indices[k]);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double e : entries_) s += e * e;
  return std::sqrt(s);
}

bool DenseMatrix::is_finite() const {
  for (double e : entries_) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw DimensionError("matvec: vector length does not match column count");
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions do not match");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

double ToleranceConfig::rank_tol_for(std::size_t rows,
                                     std::size_t cols) const {
  if (rank_rel_tol) return *rank_rel_tol;
  return std::numeric_limits<double>::epsilon() *
         static_cast<double>(std::max(rows, cols));
}

void ToleranceConfig::validate() const {
  auto in_range = [](double t) { return t > 0.0 && t < 1.0; };
  if (!in_range(eig_multiplicity_tol) || !in_range(range_membership_tol) ||
      !in_range(spd_tol) || (rank_rel_tol && !in_range(*rank_rel_tol))) {
    throw ArgumentError(
        "ToleranceConfig: thresholds must be strictly positive and < 1");
  }
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace maxmin
