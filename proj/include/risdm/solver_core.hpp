// SPDX-License-Identifier: Apache-2.0
//
// Shared solver numerics: minimum-norm solves of two-row complex constraint
// systems via SVD, the closed-form power-allocation roots, compressive-sensing
// reweighting, top-k position selection, and the standard-normal quantile.

#ifndef RISDM_SOLVER_CORE_HPP
#define RISDM_SOLVER_CORE_HPP

#include <optional>

#include "risdm/types.hpp"

namespace risdm {

struct Pinv2 {
  CMat pinv;         // K x 2 Moore-Penrose pseudo-inverse
  int rank = 0;      // retained numerical rank (0..2)
  double smax = 0.0;
  double smin = 0.0;

  bool rank_deficient() const { return rank < 2; }
};

/// Pseudo-inverse of a 2 x K system. Singular values below
/// rel_tol * sigma_max are dropped; a rank-deficient system is solved on the
/// retained subspace and flagged.
Pinv2 pinv2(const CMat& rows, double rel_tol = 1e-10);

struct QuadCoeffs {
  double a0 = 0.0;
  double b0 = 0.0;
  double c0 = 0.0;
};

/// Coefficients of the bilinear power form
///   a0 x^2 + b0 x y + c0 y^2 = || col_x * cx * x + col_y * cy * y ||^2
/// with x, y real amplitudes and unit-modulus symbols cx, cy.
QuadCoeffs power_coeffs(const CVec& col_x, cplx cx, const CVec& col_y, cplx cy);

/// Larger root eps1 of a0 eps^2 + (2 a0 + b0) t_e eps + (a0+b0+c0) t_e^2 - P0.
/// Setting t_u = t_e + eps1 spends the full power budget P0.
/// Returns nullopt when the discriminant is negative (infeasible).
std::optional<double> jbv_root(double t_e, const QuadCoeffs& q, double p0);

/// Larger root of the mirrored form; the caller derives t_e = t_u - eps1.
std::optional<double> psm_root(double t_u, const QuadCoeffs& q, double p0);

/// Both roots, ordered eps1 >= eps2 (used where the smaller root matters).
std::optional<std::pair<double, double>> psm_roots(double t_u,
                                                   const QuadCoeffs& q,
                                                   double p0);

/// Reweighting vector delta_n = 1 / (|w_n| + max_k |w_k|).
/// A zero vector yields the documented all-ones fallback.
RVec reweight(const CVec& w);

/// 0/1 selection of the n_a largest-magnitude entries; ties keep lowest index.
IVec select_top(const CVec& w, int n_a);

/// Standard normal CDF via erfc (reference-quality, used by tests too).
double norm_cdf(double x);

/// Inverse standard normal CDF, |Phi(Phi^-1(p)) - p| <= 1e-9 on (0, 1).
/// Throws std::domain_error outside (0, 1).
double inv_norm_cdf(double p);

}  // namespace risdm

#endif
