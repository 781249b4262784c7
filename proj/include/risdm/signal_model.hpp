// SPDX-License-Identifier: Apache-2.0
//
// Received-signal quantities: interference-plus-noise powers, rates, secrecy
// rate, and the MRT split of the joint beamformer into signal and artificial
// noise parts.

#ifndef RISDM_SIGNAL_MODEL_HPP
#define RISDM_SIGNAL_MODEL_HPP

#include <Eigen/Dense>

#include "risdm/types.hpp"

namespace risdm {

struct Constellation {
  int b = 4;                      // constellation size B
  double se_rotation_rad = kPi;   // s_e = s * exp(j * rotation)

  cplx s() const { return std::polar(1.0, kPi / b); }
  cplx s_e() const { return s() * std::polar(1.0, se_rotation_rad); }
  double rho() const { return kPi / b; }  // demodulation cone half-angle

  /// Symbol pair c = [s, s_e]^T s^H; first entry is always 1.
  Eigen::Vector2cd symbol_pair() const {
    Eigen::Vector2cd c;
    c[0] = s() * std::conj(s());
    c[1] = s_e() * std::conj(s());
    return c;
  }

  void validate() const;
};

struct NoiseModel {
  double ris_w = 1e-11;  // -80 dBm
  double bob_w = 1e-11;
  double eve_w = 1e-11;

  void validate() const;
};

/// Interference-plus-noise power at a receiver behind the RIS:
/// sigma_r^2 * sum_m |varpi_m|^2 |f_m|^2 + sigma_node^2.
double interference_power(const CVec& f, const CVec& varpi, double sigma_r2,
                          double sigma_node2);

/// Secrecy rate [log2((k*v + v*tu^2) / (k*v + k*te^2))]^+ in bits/s/Hz.
double secrecy_rate(double t_u, double t_e, double kappa, double varsigma);

/// tau = sqrt(2^mu * kappa / varsigma).
double tau_factor(double mu, double kappa, double varsigma);

/// rho = t_u + tau * t_e (diagnostic proportionality factor).
double proportionality_factor(double t_u, double t_e, double tau);

struct MrtSplit {
  CVec v_c;  // confidential-signal part, q_u * v_c = t_u * s
  CVec v_a;  // artificial-noise part, w = v_c + v_a
};

/// Splits w into an MRT-matched signal beam and the artificial-noise
/// remainder. `p` holds 0/1 selection flags of length N.
/// Throws std::domain_error when the MRT projection q_u * (p.*q_u)^H vanishes.
MrtSplit mrt_an_decompose(const CVec& w, const CVec& q_u, const IVec& p,
                          double t_u, cplx s);

}  // namespace risdm

#endif
