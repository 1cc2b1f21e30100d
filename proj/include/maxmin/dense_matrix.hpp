#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace maxmin {

/// Dense real matrix, row-major storage. The universal carrier for the
/// operator matrices A, B, D, L and the E-field blocks.
///
/// Data matrices have rows >= 1 and cols >= 1 with finite entries; the
/// file readers and checked constructors enforce this. Zero-column shapes
/// are legal values too: they represent empty bases (a trivial kernel).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  /// Row-major entries; throws ArgumentError on size mismatch or
  /// non-finite values.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<double>& entries() const { return entries_; }

  std::vector<double> row(std::size_t i) const;
  std::vector<double> col(std::size_t j) const;
  /// New matrix made of the given columns, in the given order.
  DenseMatrix select_columns(std::span<const std::size_t> indices) const;

  DenseMatrix transpose() const;
  double frobenius_norm() const;
  bool is_finite() const;

  std::vector<double> operator*(std::span<const double> x) const;  // matvec
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// Thresholds for the rank / multiplicity / membership decisions every
/// solver step depends on. All values must be strictly positive and < 1.
struct ToleranceConfig {
  /// Absolute eigenvalue-multiplicity threshold; applied scaled by
  /// max(1, |lambda_max|) so badly scaled inputs behave.
  double eig_multiplicity_tol = 1e-12;
  /// Relative factor on the largest singular value used for rank
  /// decisions. Unset means the standard eps * max(rows, cols).
  std::optional<double> rank_rel_tol{};
  /// Relative residual bound for range-membership tests.
  double range_membership_tol = 1e-10;
  /// Cholesky pivot floor, relative to the Frobenius norm of the input.
  double spd_tol = 1e-14;

  /// Effective rank factor for a matrix of the given shape.
  double rank_tol_for(std::size_t rows, std::size_t cols) const;
  /// Throws ArgumentError if any threshold is out of (0, 1).
  void validate() const;
};

double norm2(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace maxmin
