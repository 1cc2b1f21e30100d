#include <cmath>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "maxmin/dense_matrix.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/suppvec.hpp"

using maxmin::DenseMatrix;
using maxmin::SuppVecResult;

namespace {

double family_value(const std::vector<DenseMatrix>& mats,
                    const std::vector<double>& x) {
  double total = 0.0;
  for (const auto& m : mats) {
    const double v = maxmin::norm2(m * x);
    total += v * v;
  }
  return total;
}

// Frobenius norm of (I - G G^T) S: zero iff span(S) is inside span(G).
double span_residual(const DenseMatrix& s, const DenseMatrix& g) {
  double worst = 0.0;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    std::vector<double> v = s.col(j);
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const auto gk = g.col(k);
      const double c = maxmin::dot(gk, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * gk[i];
    }
    worst = std::max(worst, maxmin::norm2(v));
  }
  return worst;
}

}  // namespace

TEST_CASE("equal-norm orthogonal columns: the closed form returns the plane") {
  const SuppVecResult r = maxmin::supporting_vectors({DenseMatrix{{1, 1}, {1, -1}}});
  CHECK(r.used_special_case);
  CHECK(r.lambda_max == doctest::Approx(2.0));
  REQUIRE(r.basis.cols() == 2);
  CHECK(r.basis(0, 0) == doctest::Approx(1.0));
  CHECK(r.basis(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("identity matrix attains 1 on the whole sphere") {
  for (std::size_t n : {2u, 3u, 5u}) {
    const SuppVecResult r =
        maxmin::supporting_vectors({DenseMatrix::identity(n)});
    CHECK(r.lambda_max == doctest::Approx(1.0));
    CHECK(r.basis.cols() == n);
  }
}

TEST_CASE("two diagonal blocks sum their Gram matrices") {
  const SuppVecResult r = maxmin::supporting_vectors(
      {DenseMatrix{{1, 0}, {0, 0}}, DenseMatrix{{0, 0}, {0, 2}}});
  CHECK_FALSE(r.used_special_case);
  CHECK(r.lambda_max == doctest::Approx(4.0));
  REQUIRE(r.basis.cols() == 1);
  CHECK(std::abs(r.basis(0, 0)) <= 1e-14);
  CHECK(r.basis(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(maxmin::supporting_vectors({}), maxmin::ArgumentError);
  CHECK_THROWS_AS(
      maxmin::supporting_vectors({DenseMatrix(2, 2), DenseMatrix(2, 3)}),
      maxmin::DimensionError);
}

TEST_CASE("all-zero family: every unit vector attains the zero maximum") {
  const SuppVecResult r =
      maxmin::supporting_vectors({DenseMatrix(3, 3), DenseMatrix(2, 3)});
  CHECK(r.lambda_max == 0.0);
  CHECK(r.basis.cols() == 3);
}

TEST_CASE("positive and negative column correlation pick the diagonals") {
  const double c = std::cos(1.0 / 3.0);
  const double s = std::sin(1.0 / 3.0);
  const SuppVecResult pos =
      maxmin::supporting_vectors({DenseMatrix{{1, c}, {0, s}}});
  REQUIRE(pos.used_special_case);
  CHECK(pos.lambda_max == doctest::Approx(1.0 + c));
  REQUIRE(pos.basis.cols() == 1);
  CHECK(pos.basis(0, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(pos.basis(1, 0) == doctest::Approx(std::sqrt(0.5)));

  const SuppVecResult neg =
      maxmin::supporting_vectors({DenseMatrix{{1, -c}, {0, s}}});
  REQUIRE(neg.used_special_case);
  CHECK(neg.lambda_max == doctest::Approx(1.0 + c));
  REQUIRE(neg.basis.cols() == 1);
  CHECK(neg.basis(0, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(neg.basis(1, 0) == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("attainment: basis vectors reach lambda_max, random probes stay below") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t k = 1 + rng() % 3;
    std::vector<DenseMatrix> mats;
    for (std::size_t i = 0; i < k; ++i) {
      mats.push_back(testsup::random_matrix(rng, 1 + rng() % 6, n));
    }
    const SuppVecResult r = maxmin::supporting_vectors(mats);
    for (std::size_t j = 0; j < r.basis.cols(); ++j) {
      const auto v = r.basis.col(j);
      CHECK(std::abs(family_value(mats, v) - r.lambda_max) <=
            1e-9 * std::max(1.0, r.lambda_max));
      // sign closure of the solution set
      std::vector<double> neg(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      CHECK(std::abs(family_value(mats, neg) - r.lambda_max) <=
            1e-9 * std::max(1.0, r.lambda_max));
    }
    for (int probe = 0; probe < 1000; ++probe) {
      const auto x = testsup::random_unit_vector(rng, n);
      CHECK(family_value(mats, x) <= r.lambda_max + 1e-9);
    }
  }
}

TEST_CASE("special case agrees with the general eigendecomposition branch") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng() % 6;
    DenseMatrix mat = testsup::random_matrix(rng, m, 2);
    // rescale the second column to the norm of the first
    const double n1 = maxmin::norm2(mat.col(0));
    const double n2 = maxmin::norm2(mat.col(1));
    if (n1 < 1e-3 || n2 < 1e-3) continue;
    for (std::size_t i = 0; i < m; ++i) mat(i, 1) *= n1 / n2;

    const SuppVecResult fast = maxmin::supporting_vectors({mat});
    const SuppVecResult general = maxmin::supporting_vectors_general({mat});
    REQUIRE(fast.used_special_case);
    CHECK_FALSE(general.used_special_case);
    CHECK(std::abs(fast.lambda_max - general.lambda_max) <=
          1e-10 * std::max(1.0, general.lambda_max));
    REQUIRE(fast.basis.cols() == general.basis.cols());
    CHECK(span_residual(fast.basis, general.basis) <= 1e-8);
    CHECK(span_residual(general.basis, fast.basis) <= 1e-8);
  }
}
