#pragma once

#include <cstddef>
#include <vector>

#include "maxmin/dense_matrix.hpp"

namespace maxmin {

/// The reformulated maxmin instance: max ||Ax||_2 subject to ||Bx||_2 <= 1.
/// A and B must share a column count; row counts may differ.
struct MaxminProblem {
  DenseMatrix a;
  DenseMatrix b;
  ToleranceConfig tol{};
};

enum class SolveCase { Case1, Case2 };

/// Exact solution of the reformulated maxmin.
///
/// `solutions` holds one representative per supporting-vector basis column
/// plus its sign mate, so x in solutions implies -x in solutions. The full
/// solution set is the sign-closed span of these representatives intersected
/// with {x : ||Bx|| = 1}.
struct MaxminSolution {
  double optimal_value = 0.0;  // max of ||Ax|| over the feasible set
  std::vector<std::vector<double>> solutions;
  SolveCase case_used = SolveCase::Case1;
  /// Columns kept by the rank-revealing reduction (Case 2 only), ascending.
  std::vector<std::size_t> selected_indices;
  double lambda_max = 0.0;  // optimal_value^2
  // Diagnostics of the range-membership filter.
  std::size_t y_candidates_total = 0;
  std::size_t y_candidates_accepted = 0;
  bool degenerate = false;  // A == 0: value 0, canonical solution 0
  bool used_projection_fallback = false;
};

/// Solvability test: true iff ker(B) is contained in ker(A), checked as
/// ||A k|| <= range_membership_tol * max(1, ||A||) for every null-space
/// basis vector k of B.
bool existence_check(const DenseMatrix& a, const DenseMatrix& b,
                     const ToleranceConfig& tol = {});

/// Trivial-kernel path: with ker(B) = {0}, candidates y are the supporting
/// vectors of A B^+; those inside range(B) (projector residual
/// ||y - BB^+ y|| <= range_membership_tol) map back as x0 = B^+ y.
/// When the eigenspace mixes in out-of-range directions, candidates are
/// projected onto range(B) and renormalized before failing.
MaxminSolution solve_case1(const DenseMatrix& a, const DenseMatrix& b,
                           const ToleranceConfig& tol = {});

/// Full solver. Errors with NoSolutionError when ker(B) is not contained in
/// ker(A); delegates to solve_case1 for trivial kernels; otherwise reduces
/// both operators to the rank-revealing column subset of B, solves the
/// reduced problem, and re-embeds solutions with zeros at dropped columns.
/// The optimal value is unchanged by the reduction.
MaxminSolution solve(const DenseMatrix& a, const DenseMatrix& b,
                     const ToleranceConfig& tol = {});
MaxminSolution solve(const MaxminProblem& problem);

/// Vertical concatenation: ||stack(B_1..B_k) x||^2 = sum ||B_i x||^2.
DenseMatrix stack_operators(const std::vector<DenseMatrix>& blocks);

/// ||Ax|| / ||Bx||; DomainError when Bx = 0.
double ratio_value(const DenseMatrix& a, const DenseMatrix& b,
                   std::span<const double> x);

}  // namespace maxmin
