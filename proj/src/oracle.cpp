#include "maxmin/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "maxmin/errors.hpp"
#include "maxmin/linalg.hpp"

namespace maxmin::oracle {

namespace {

// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations,
// values only. Kept local so the oracle does not ride on the same
// eigensolver as the solver path.
double jacobi_lambda_max(DenseMatrix w) {
  const std::size_t n = w.rows();
  if (n == 1) return w(0, 0);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(w(i, j)));
  }
  if (scale == 0.0) return 0.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += w(p, q) * w(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale * n) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(w(p, q)) <= 1e-18 * scale) continue;
        const double theta = 0.5 * std::atan2(2.0 * w(p, q), w(q, q) - w(p, p));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::size_t i = 0; i < n; ++i) {
          const double wip = w(i, p);
          const double wiq = w(i, q);
          w(i, p) = c * wip - s * wiq;
          w(i, q) = s * wip + c * wiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double wpi = w(p, i);
          const double wqi = w(q, i);
          w(p, i) = c * wpi - s * wqi;
          w(q, i) = s * wpi + c * wqi;
        }
      }
    }
  }
  double lam = w(0, 0);
  for (std::size_t i = 1; i < n; ++i) lam = std::max(lam, w(i, i));
  return lam;
}

// Solve R^T Z = K for Z, with R upper triangular (so R^T is lower).
DenseMatrix forward_solve_transposed(const DenseMatrix& r,
                                     const DenseMatrix& k) {
  const std::size_t n = r.rows();
  DenseMatrix z(n, k.cols());
  for (std::size_t col = 0; col < k.cols(); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = k(i, col);
      for (std::size_t j = 0; j < i; ++j) v -= r(j, i) * z(j, col);
      z(i, col) = v / r(i, i);
    }
  }
  return z;
}

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa draw in (0, 1]; portable across standard libraries.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

double generalized_eig_value(const DenseMatrix& a, const DenseMatrix& b,
                             const ToleranceConfig& tol) {
  tol.validate();
  if (a.cols() != b.cols()) {
    throw DimensionError("generalized_eig_value: column counts differ");
  }
  const DenseMatrix gram_b = b.transpose() * b;
  const DenseMatrix r = cholesky(gram_b, tol);  // throws if B^T B singular
  const DenseMatrix gram_a = a.transpose() * a;
  // W = R^{-T} (A^T A) R^{-1}, same spectrum as the pencil.
  const DenseMatrix z = forward_solve_transposed(r, gram_a);
  DenseMatrix w = forward_solve_transposed(r, z.transpose());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = i + 1; j < w.cols(); ++j) {
      const double m = 0.5 * (w(i, j) + w(j, i));
      w(i, j) = m;
      w(j, i) = m;
    }
  }
  return std::sqrt(std::max(0.0, jacobi_lambda_max(std::move(w))));
}

SphereSample sphere_sampling(const DenseMatrix& a, const DenseMatrix& b,
                             std::size_t samples, std::size_t refine_steps,
                             std::uint64_t seed) {
  if (a.cols() != b.cols()) {
    throw DimensionError("sphere_sampling: column counts differ");
  }
  const std::size_t n = a.cols();
  std::mt19937_64 rng(seed);
  SphereSample out;
  out.seed = seed;
  out.best_x.assign(n, 0.0);

  double best = -1.0;
  std::vector<double> x(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : x) v = gaussian(rng);
    const double bn = norm2(b * x);
    if (bn <= 1e-12 * norm2(x)) continue;
    for (double& v : x) v /= bn;
    const double value = norm2(a * x);
    if (value > best) {
      best = value;
      out.best_x = x;
    }
  }
  if (best < 0.0) return out;  // nothing feasible sampled

  double step = 0.5 * std::max(norm2(out.best_x), 1e-12);
  for (std::size_t r = 0; r < refine_steps; ++r) {
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> cand = out.best_x;
          cand[i] += sign * step;
          const double bn = norm2(b * cand);
          if (bn == 0.0) continue;
          const double value = norm2(a * cand) / bn;
          if (value > best) {
            best = value;
            for (double& v : cand) v /= bn;
            out.best_x = std::move(cand);
            improved = true;
          }
        }
      }
    }
    step *= 0.5;
  }
  out.value_lower_bound = best;
  return out;
}

}  // namespace maxmin::oracle
