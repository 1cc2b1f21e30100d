#include <cmath>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "maxmin/dense_matrix.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/linalg.hpp"
#include "test_oracles.hpp"

using maxmin::DenseMatrix;
using maxmin::ToleranceConfig;

namespace {

double penrose_worst_residual(const DenseMatrix& b, const DenseMatrix& p) {
  const DenseMatrix bpb = b * p * b;
  const DenseMatrix pbp = p * b * p;
  const DenseMatrix bp = b * p;
  const DenseMatrix pb = p * b;
  double worst = testsup::max_abs_diff(bpb, b);
  worst = std::max(worst, testsup::max_abs_diff(pbp, p));
  worst = std::max(worst, testsup::max_abs_diff(bp, bp.transpose()));
  worst = std::max(worst, testsup::max_abs_diff(pb, pb.transpose()));
  return worst;
}

}  // namespace

TEST_CASE("tolerance config rejects out-of-range values") {
  ToleranceConfig tol;
  tol.validate();
  tol.range_membership_tol = 0.0;
  CHECK_THROWS_AS(tol.validate(), maxmin::ArgumentError);
  tol.range_membership_tol = 1.5;
  CHECK_THROWS_AS(tol.validate(), maxmin::ArgumentError);
  tol = ToleranceConfig{};
  tol.rank_rel_tol = -1e-3;
  CHECK_THROWS_AS(tol.validate(), maxmin::ArgumentError);
}

TEST_CASE("sym_eig_max: identity has a full eigenspace") {
  const auto r = maxmin::sym_eig_max(DenseMatrix::identity(2));
  CHECK(r.lambda_max == doctest::Approx(1.0));
  CHECK(r.basis.cols() == 2);
}

TEST_CASE("sym_eig_max: diagonal matrix, simple top eigenvalue") {
  const auto r = maxmin::sym_eig_max(DenseMatrix{{1, 0}, {0, 4}});
  CHECK(r.lambda_max == doctest::Approx(4.0));
  REQUIRE(r.basis.cols() == 1);
  CHECK(r.basis(0, 0) == doctest::Approx(0.0));
  CHECK(r.basis(1, 0) == doctest::Approx(1.0));  // sign-normalized to +e2
}

TEST_CASE("sym_eig_max: scaled identity from the equal-norm Gram matrix") {
  // Gram matrix of [[1,1],[1,-1]] is 2I: double eigenvalue.
  const auto r = maxmin::sym_eig_max(DenseMatrix{{2, 0}, {0, 2}});
  CHECK(r.lambda_max == doctest::Approx(2.0));
  CHECK(r.basis.cols() == 2);
}

TEST_CASE("sym_eig_max rejects bad input") {
  CHECK_THROWS_AS(maxmin::sym_eig_max(DenseMatrix{{1, 2, 3}, {4, 5, 6}}),
                  maxmin::DimensionError);
  CHECK_THROWS_AS(maxmin::sym_eig_max(DenseMatrix{{1, 2}, {0, 1}}),
                  maxmin::DimensionError);
}

TEST_CASE("sym_eig_max agrees with an independent Jacobi oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const DenseMatrix g = testsup::random_matrix(rng, n, n);
    const DenseMatrix s = g.transpose() * g;
    const auto r = maxmin::sym_eig_max(s);
    const auto spectrum = testsup::jacobi_eigenvalues(s);
    const double expected = spectrum.back();
    CHECK(std::abs(r.lambda_max - expected) <=
          1e-10 * std::max(1.0, std::abs(expected)));
    // every basis column is an eigenvector at lambda_max
    for (std::size_t j = 0; j < r.basis.cols(); ++j) {
      const auto v = r.basis.col(j);
      const auto sv = s * v;
      double resid = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = sv[i] - r.lambda_max * v[i];
        resid += d * d;
      }
      CHECK(std::sqrt(resid) <= 1e-9 * std::max(1.0, r.lambda_max));
    }
  }
}

TEST_CASE("pseudoinverse: tall identity block has the displayed left inverse") {
  const DenseMatrix b{{1, 0}, {0, 1}, {0, 0}};
  const DenseMatrix p = maxmin::pseudoinverse(b);
  REQUIRE(p.rows() == 2);
  REQUIRE(p.cols() == 3);
  const DenseMatrix expected{{1, 0, 0}, {0, 1, 0}};
  CHECK(testsup::max_abs_diff(p, expected) <= 1e-12);
}

TEST_CASE("pseudoinverse: diagonal with a zero row") {
  const DenseMatrix p = maxmin::pseudoinverse(DenseMatrix{{2, 0}, {0, 0}});
  CHECK(p(0, 0) == doctest::Approx(0.5));
  CHECK(std::abs(p(0, 1)) + std::abs(p(1, 0)) + std::abs(p(1, 1)) <= 1e-15);
}

TEST_CASE("pseudoinverse: random 5x3 satisfies the four identities") {
  std::mt19937_64 rng(7);
  const DenseMatrix b = testsup::random_matrix(rng, 5, 3);
  const DenseMatrix p = maxmin::pseudoinverse(b);
  CHECK(penrose_worst_residual(b, p) <= 1e-10 * b.frobenius_norm());
}

TEST_CASE("Penrose quadruple holds for random matrices up to 8x8") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t n = 1 + rng() % 8;
    DenseMatrix b = testsup::random_matrix(rng, m, n);
    if (trial % 3 == 0) {
      b = testsup::random_rank_matrix(rng, m, n, 1 + rng() % std::min(m, n));
    }
    const DenseMatrix p = maxmin::pseudoinverse(b);
    CHECK(penrose_worst_residual(b, p) <=
          1e-9 * std::max(1.0, b.frobenius_norm()));
  }
}

TEST_CASE("BB+ is the orthogonal projector onto range(B)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng() % 6;
    const std::size_t n = 1 + rng() % 6;
    const DenseMatrix b =
        testsup::random_rank_matrix(rng, m, n, 1 + rng() % std::min(m, n));
    const DenseMatrix p = b * maxmin::pseudoinverse(b);
    CHECK(testsup::max_abs_diff(p, p.transpose()) <= 1e-10);
    CHECK(testsup::max_abs_diff(p * p, p) <= 1e-10);
    // P fixes vectors already in the range
    const auto w = testsup::random_unit_vector(rng, n);
    const auto bw = b * w;
    const auto pbw = p * bw;
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(std::abs(pbw[i] - bw[i]) <= 1e-9 * std::max(1.0, maxmin::norm2(bw)));
    }
  }
}

TEST_CASE("B+ is a left inverse when the kernel is trivial") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = n + rng() % 4;
    const DenseMatrix b = testsup::random_full_col_rank(rng, m, n);
    const DenseMatrix pb = maxmin::pseudoinverse(b) * b;
    CHECK(testsup::max_abs_diff(pb, DenseMatrix::identity(n)) <= 1e-10);
  }
}

TEST_CASE("cholesky: identity and diagonal cases") {
  CHECK(testsup::max_abs_diff(maxmin::cholesky(DenseMatrix::identity(3)),
                              DenseMatrix::identity(3)) <= 1e-15);
  const DenseMatrix c = maxmin::cholesky(DenseMatrix{{4, 0}, {0, 9}});
  CHECK(c(0, 0) == doctest::Approx(2.0));
  CHECK(c(1, 1) == doctest::Approx(3.0));
  CHECK(c(0, 1) == doctest::Approx(0.0));
  CHECK(c(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("cholesky reconstructs a random SPD matrix") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const DenseMatrix l = testsup::random_spd(rng, n);
    const DenseMatrix c = maxmin::cholesky(l);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(c(i, i) > 0.0);
      for (std::size_t j = 0; j < i; ++j) CHECK(c(i, j) == 0.0);
    }
    CHECK(testsup::max_abs_diff(c.transpose() * c, l) <=
          1e-10 * l.frobenius_norm());
  }
}

TEST_CASE("cholesky names the failing pivot") {
  try {
    maxmin::cholesky(DenseMatrix{{1, 0}, {0, -1}});
    FAIL("expected DefinitenessError");
  } catch (const maxmin::DefinitenessError& e) {
    CHECK(e.pivot_index == 1);
    CHECK(std::string(e.what()).find("pivot 1") != std::string::npos);
  }
  CHECK_THROWS_AS(maxmin::cholesky(DenseMatrix{{1, 2}, {0, 1}}),
                  maxmin::DimensionError);
}

TEST_CASE("cols_indep: rank-1 matrix keeps the single nonzero column") {
  const auto sel = maxmin::cols_indep(DenseMatrix{{1, 0}, {0, 0}});
  REQUIRE(sel.indices.size() == 1);
  CHECK(sel.indices[0] == 0);
  CHECK(sel.selected(0, 0) == doctest::Approx(1.0));
  CHECK(sel.selected(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("cols_indep: full-rank square matrix keeps everything") {
  std::mt19937_64 rng(23);
  const DenseMatrix d = testsup::random_full_col_rank(rng, 4, 4);
  const auto sel = maxmin::cols_indep(d);
  REQUIRE(sel.indices.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) CHECK(sel.indices[j] == j);
}

TEST_CASE("cols_indep drops one of a dependent column pair") {
  std::mt19937_64 rng(29);
  DenseMatrix d = testsup::random_matrix(rng, 5, 4);
  for (std::size_t i = 0; i < 5; ++i) d(i, 2) = 2.0 * d(i, 0);
  const auto sel = maxmin::cols_indep(d);
  CHECK(sel.indices.size() == maxmin::rank_of(d));
  CHECK(maxmin::rank_of(sel.selected) == maxmin::rank_of(d));
  // independent rank check: positive spectrum count of the Gram matrix
  const auto gram_spectrum =
      testsup::jacobi_eigenvalues(sel.selected.transpose() * sel.selected);
  std::size_t positive = 0;
  for (double v : gram_spectrum) {
    if (v > 1e-10 * gram_spectrum.back()) ++positive;
  }
  CHECK(positive == sel.indices.size());
  bool has_both = false;
  bool has0 = false, has2 = false;
  for (std::size_t idx : sel.indices) {
    if (idx == 0) has0 = true;
    if (idx == 2) has2 = true;
  }
  has_both = has0 && has2;
  CHECK_FALSE(has_both);
  for (std::size_t k = 1; k < sel.indices.size(); ++k) {
    CHECK(sel.indices[k - 1] < sel.indices[k]);  // ascending
  }
}

TEST_CASE("null_space: trivial kernel gives an empty basis") {
  const DenseMatrix k = maxmin::null_space(DenseMatrix{{1, 0}, {0, 1}, {0, 0}});
  CHECK(k.cols() == 0);
}

TEST_CASE("null_space: one-dimensional kernel along e2") {
  const DenseMatrix k = maxmin::null_space(DenseMatrix{{1, 0}, {0, 0}});
  REQUIRE(k.cols() == 1);
  CHECK(std::abs(k(0, 0)) <= 1e-14);
  CHECK(std::abs(k(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("null_space: zero matrix has a full kernel") {
  const DenseMatrix k = maxmin::null_space(DenseMatrix(2, 3));
  REQUIRE(k.cols() == 3);
  // columns are orthonormal
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(std::abs(maxmin::dot(k.col(a), k.col(b)) - expected) <= 1e-14);
    }
  }
}

TEST_CASE("null_space columns are annihilated by B") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 6;
    const std::size_t r = rng() % (std::min(m, n) + 1);
    const DenseMatrix b =
        r == 0 ? DenseMatrix(m, n) : testsup::random_rank_matrix(rng, m, n, r);
    const DenseMatrix k = maxmin::null_space(b);
    CHECK(k.cols() == n - maxmin::rank_of(b));
    for (std::size_t j = 0; j < k.cols(); ++j) {
      CHECK(maxmin::norm2(b * k.col(j)) <= 1e-10 * std::max(1.0, b.frobenius_norm()));
    }
  }
}

TEST_CASE("rank_of: identity, proportional rows, constructed rank") {
  CHECK(maxmin::rank_of(DenseMatrix::identity(3)) == 3);
  CHECK(maxmin::rank_of(DenseMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(maxmin::rank_of(DenseMatrix(4, 5)) == 0);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng() % 6;
    const std::size_t n = 2 + rng() % 6;
    const std::size_t r = 1 + rng() % std::min(m, n);
    CHECK(maxmin::rank_of(testsup::random_rank_matrix(rng, m, n, r)) == r);
  }
}

TEST_CASE("decompositions are deterministic on identical inputs") {
  std::mt19937_64 rng(41);
  const DenseMatrix b = testsup::random_matrix(rng, 6, 4);
  const DenseMatrix s = b.transpose() * b;
  CHECK(maxmin::pseudoinverse(b) == maxmin::pseudoinverse(b));
  CHECK(maxmin::null_space(b) == maxmin::null_space(b));
  const auto e1 = maxmin::sym_eig_max(s);
  const auto e2 = maxmin::sym_eig_max(s);
  CHECK(e1.lambda_max == e2.lambda_max);
  CHECK(e1.basis == e2.basis);
  const auto c1 = maxmin::cols_indep(b);
  const auto c2 = maxmin::cols_indep(b);
  CHECK(c1.indices == c2.indices);
  CHECK(c1.selected == c2.selected);
}
