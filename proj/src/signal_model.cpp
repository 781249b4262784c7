// SPDX-License-Identifier: Apache-2.0

#include "risdm/signal_model.hpp"

#include <cmath>
#include <stdexcept>

namespace risdm {

void Constellation::validate() const {
  if (b < 3) throw std::invalid_argument("constellation size must be >= 3");
}

void NoiseModel::validate() const {
  if (ris_w < 0 || bob_w < 0 || eve_w < 0) {
    throw std::invalid_argument("noise powers must be >= 0");
  }
}

double interference_power(const CVec& f, const CVec& varpi, double sigma_r2,
                          double sigma_node2) {
  if (f.size() != varpi.size()) {
    throw std::invalid_argument("interference_power: dimension mismatch");
  }
  double acc = 0.0;
  for (Eigen::Index m = 0; m < f.size(); ++m) {
    acc += std::norm(varpi[m]) * std::norm(f[m]);
  }
  return sigma_r2 * acc + sigma_node2;
}

double secrecy_rate(double t_u, double t_e, double kappa, double varsigma) {
  if (!(kappa > 0) || !(varsigma > 0)) {
    throw std::invalid_argument("noise powers must be positive");
  }
  const double num = kappa * varsigma + varsigma * t_u * t_u;
  const double den = kappa * varsigma + kappa * t_e * t_e;
  const double rs = std::log2(num / den);
  return rs > 0.0 ? rs : 0.0;
}

double tau_factor(double mu, double kappa, double varsigma) {
  return std::sqrt(std::exp2(mu) * kappa / varsigma);
}

double proportionality_factor(double t_u, double t_e, double tau) {
  return t_u + tau * t_e;
}

MrtSplit mrt_an_decompose(const CVec& w, const CVec& q_u, const IVec& p,
                          double t_u, cplx s) {
  if (w.size() != q_u.size() || p.size() != w.size()) {
    throw std::invalid_argument("mrt_an_decompose: dimension mismatch");
  }
  // MRT direction restricted to the selected positions.
  CVec v_mrt(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    v_mrt[i] = p[i] != 0 ? std::conj(q_u[i]) : cplx{0.0, 0.0};
  }
  const cplx proj = row_dot(q_u, v_mrt);
  const double mag = std::abs(proj);
  if (mag < 1e-300) {
    throw std::domain_error("degenerate channel: zero MRT projection");
  }
  MrtSplit split;
  split.v_c = v_mrt * (std::polar(1.0, -std::arg(proj)) * t_u * s / mag);
  split.v_a = w - split.v_c;
  return split;
}

}  // namespace risdm
