// SPDX-License-Identifier: Apache-2.0

#include "risdm/solver_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

namespace risdm {

Pinv2 pinv2(const CMat& rows, double rel_tol) {
  if (rows.rows() != 2 || rows.cols() < 2) {
    throw std::invalid_argument("pinv2 expects a 2 x K system with K >= 2");
  }
  Eigen::JacobiSVD<CMat> svd(rows, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  const double cutoff = rel_tol * s[0];

  Pinv2 out;
  out.smax = s[0];
  out.smin = s[s.size() - 1];
  Eigen::Vector2d inv = Eigen::Vector2d::Zero();
  for (int i = 0; i < 2; ++i) {
    if (s[i] > cutoff && s[i] > 0.0) {
      inv[i] = 1.0 / s[i];
      ++out.rank;
    }
  }
  out.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  return out;
}

QuadCoeffs power_coeffs(const CVec& col_x, cplx cx, const CVec& col_y, cplx cy) {
  const CVec u = col_x * cx;
  const CVec v = col_y * cy;
  QuadCoeffs q;
  q.a0 = u.squaredNorm();
  q.c0 = v.squaredNorm();
  q.b0 = 2.0 * (u.dot(v)).real();  // u.dot(v) = u^H v
  return q;
}

std::optional<double> jbv_root(double t_e, const QuadCoeffs& q, double p0) {
  if (!(q.a0 > 0.0)) throw std::invalid_argument("jbv_root requires a0 > 0");
  const double disc =
      t_e * t_e * (q.b0 * q.b0 - 4.0 * q.a0 * q.c0) + 4.0 * q.a0 * p0;
  if (disc < 0.0) return std::nullopt;
  return (-t_e * (2.0 * q.a0 + q.b0) + std::sqrt(disc)) / (2.0 * q.a0);
}

std::optional<std::pair<double, double>> psm_roots(double t_u,
                                                   const QuadCoeffs& q,
                                                   double p0) {
  if (!(q.a0 > 0.0)) throw std::invalid_argument("psm_root requires a0 > 0");
  const double disc =
      t_u * t_u * (q.b0 * q.b0 - 4.0 * q.a0 * q.c0) + 4.0 * q.a0 * p0;
  if (disc < 0.0) return std::nullopt;
  const double base = t_u * (2.0 * q.a0 + q.b0);
  const double root = std::sqrt(disc);
  return std::make_pair((base + root) / (2.0 * q.a0),
                        (base - root) / (2.0 * q.a0));
}

std::optional<double> psm_root(double t_u, const QuadCoeffs& q, double p0) {
  auto roots = psm_roots(t_u, q, p0);
  if (!roots) return std::nullopt;
  return roots->first;
}

RVec reweight(const CVec& w) {
  const Eigen::Index n = w.size();
  RVec mags = w.cwiseAbs();
  const double winf = mags.maxCoeff();
  RVec delta(n);
  if (winf <= 0.0) {
    delta.setOnes();  // documented fallback for the all-zero vector
    return delta;
  }
  for (Eigen::Index i = 0; i < n; ++i) delta[i] = 1.0 / (mags[i] + winf);
  return delta;
}

IVec select_top(const CVec& w, int n_a) {
  const int n = static_cast<int>(w.size());
  if (n_a < 1 || n_a > n) {
    throw std::invalid_argument("select_top: need 1 <= n_a <= N");
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const RVec mags = w.cwiseAbs();
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return mags[a] > mags[b]; });
  IVec p = IVec::Zero(n);
  for (int k = 0; k < n_a; ++k) p[idx[k]] = 1;
  return p;
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Acklam's rational approximation to the normal quantile (~1e-9 after the
// Halley refinement below).
double quantile_estimate(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double inv_norm_cdf(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("inv_norm_cdf requires p in (0, 1)");
  }
  double x = quantile_estimate(p);
  // One Halley step against the erfc-based CDF.
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * kPi) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

}  // namespace risdm
