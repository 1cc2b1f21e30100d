#include "maxmin/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxmin/errors.hpp"
#include "maxmin/linalg.hpp"
#include "maxmin/suppvec.hpp"

namespace maxmin {

namespace {

void require_same_cols(const DenseMatrix& a, const DenseMatrix& b,
                       const char* op) {
  if (a.cols() != b.cols()) {
    throw DimensionError(std::string(op) +
                         ": A and B must have the same column count");
  }
}

MaxminSolution degenerate_solution(std::size_t n) {
  MaxminSolution s;
  s.degenerate = true;
  s.solutions.push_back(std::vector<double>(n, 0.0));
  return s;
}

std::vector<double> negated(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

bool existence_check(const DenseMatrix& a, const DenseMatrix& b,
                     const ToleranceConfig& tol) {
  tol.validate();
  require_same_cols(a, b, "existence_check");
  const DenseMatrix kernel = null_space(b, tol);
  if (kernel.cols() == 0) return true;
  const double bound =
      tol.range_membership_tol * std::max(1.0, a.frobenius_norm());
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    if (norm2(a * kernel.col(j)) > bound) return false;
  }
  return true;
}

MaxminSolution solve_case1(const DenseMatrix& a, const DenseMatrix& b,
                           const ToleranceConfig& tol) {
  tol.validate();
  require_same_cols(a, b, "solve_case1");
  if (rank_of(b, tol) != b.cols()) {
    throw ArgumentError("solve_case1: ker(B) is nontrivial; use solve");
  }
  const std::size_t n = b.cols();
  if (a.frobenius_norm() == 0.0) return degenerate_solution(n);

  const DenseMatrix b_pinv = pseudoinverse(b, tol);
  const DenseMatrix m = a * b_pinv;
  const SuppVecResult sv = supporting_vectors({m}, tol);
  const DenseMatrix range_proj = b * b_pinv;  // orthogonal projector

  MaxminSolution out;
  out.lambda_max = sv.lambda_max;
  out.optimal_value = std::sqrt(sv.lambda_max);
  out.y_candidates_total = sv.basis.cols();

  std::vector<std::vector<double>> accepted;
  for (std::size_t j = 0; j < sv.basis.cols(); ++j) {
    std::vector<double> y = sv.basis.col(j);
    const std::vector<double> py = range_proj * y;
    double resid = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double d = y[i] - py[i];
      resid += d * d;
    }
    if (std::sqrt(resid) <= tol.range_membership_tol) {
      accepted.push_back(std::move(y));
    }
  }
  if (accepted.empty()) {
    // Floating-point eigenspaces with multiplicity can mix in out-of-range
    // directions; the projection of a maximizer onto range(B) is still a
    // maximizer, so project and renormalize before giving up.
    out.used_projection_fallback = true;
    for (std::size_t j = 0; j < sv.basis.cols(); ++j) {
      std::vector<double> py = range_proj * sv.basis.col(j);
      const double nrm = norm2(py);
      if (nrm <= tol.range_membership_tol) continue;
      for (double& v : py) v /= nrm;
      bool duplicate = false;
      for (const auto& prev : accepted) {
        if (std::abs(dot(prev, py)) > 1.0 - 1e-12) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) accepted.push_back(std::move(py));
    }
  }
  if (accepted.empty()) {
    throw RangeFilterError(
        "solve_case1: none of " + std::to_string(out.y_candidates_total) +
            " supporting-vector candidates lies in range(B), even after "
            "projection",
        out.y_candidates_total);
  }
  out.y_candidates_accepted = accepted.size();
  for (const auto& y : accepted) {
    std::vector<double> x = b_pinv * y;
    std::vector<double> neg = negated(x);
    out.solutions.push_back(std::move(x));
    out.solutions.push_back(std::move(neg));
  }
  return out;
}

MaxminSolution solve(const DenseMatrix& a, const DenseMatrix& b,
                     const ToleranceConfig& tol) {
  tol.validate();
  require_same_cols(a, b, "solve");
  if (!existence_check(a, b, tol)) {
    throw NoSolutionError("ker(B) not contained in ker(A)");
  }
  if (rank_of(b, tol) == b.cols()) return solve_case1(a, b, tol);

  const ColumnSelection sel = cols_indep(b, tol);
  const DenseMatrix a_reduced = a.select_columns(sel.indices);
  MaxminSolution sub = solve_case1(a_reduced, sel.selected, tol);

  MaxminSolution out;
  out.optimal_value = sub.optimal_value;
  out.lambda_max = sub.lambda_max;
  out.case_used = SolveCase::Case2;
  out.selected_indices = sel.indices;
  out.y_candidates_total = sub.y_candidates_total;
  out.y_candidates_accepted = sub.y_candidates_accepted;
  out.degenerate = sub.degenerate;
  out.used_projection_fallback = sub.used_projection_fallback;
  for (const auto& y : sub.solutions) {
    std::vector<double> x(a.cols(), 0.0);
    for (std::size_t k = 0; k < sel.indices.size(); ++k) {
      x[sel.indices[k]] = y[k];
    }
    out.solutions.push_back(std::move(x));
  }
  return out;
}

MaxminSolution solve(const MaxminProblem& problem) {
  return solve(problem.a, problem.b, problem.tol);
}

DenseMatrix stack_operators(const std::vector<DenseMatrix>& blocks) {
  if (blocks.empty()) {
    throw ArgumentError("stack_operators: block list is empty");
  }
  const std::size_t n = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& blk : blocks) {
    if (blk.cols() != n) {
      throw DimensionError("stack_operators: blocks must share a column count");
    }
    rows += blk.rows();
  }
  DenseMatrix out(rows, n);
  std::size_t at = 0;
  for (const auto& blk : blocks) {
    for (std::size_t i = 0; i < blk.rows(); ++i, ++at) {
      for (std::size_t j = 0; j < n; ++j) out(at, j) = blk(i, j);
    }
  }
  return out;
}

double ratio_value(const DenseMatrix& a, const DenseMatrix& b,
                   std::span<const double> x) {
  require_same_cols(a, b, "ratio_value");
  const double denom = norm2(b * x);
  if (denom == 0.0) {
    throw DomainError("ratio_value: Bx = 0");
  }
  return norm2(a * x) / denom;
}

}  // namespace maxmin
