// SPDX-License-Identifier: Apache-2.0

#include "risdm/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "risdm/rng.hpp"

namespace risdm {

void GridSpec::validate() const {
  if (nx < 1 || nz < 1) throw std::invalid_argument("grid counts must be >= 1");
  if (spacing_m < 0) throw std::invalid_argument("grid spacing must be positive");
}

void RisSpec::validate() const {
  if (my < 1 || mz < 1) throw std::invalid_argument("RIS counts must be >= 1");
  if (eta < 0) throw std::invalid_argument("amplification factor must be >= 0");
}

CVec steering_1d(int count, double spacing_m, double phase_arg, double lambda) {
  if (count < 1) throw std::invalid_argument("steering length must be >= 1");
  if (!(lambda > 0)) throw std::invalid_argument("wavelength must be positive");
  CVec v(count);
  const double step = 2.0 * kPi * spacing_m * phase_arg / lambda;
  for (int k = 0; k < count; ++k) {
    v[k] = std::polar(1.0, step * static_cast<double>(k));
  }
  return v;
}

namespace {

CVec kron(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

// Planar steering: horizontal factor along the first axis with phase argument
// sin(az) sin(el), vertical factor along the second axis with cos(el)
// (corrected) or cos(az) (printed form).
CVec planar_steering(const Bearing& bear, int n_h, int n_v, double spacing,
                     double lambda, SteeringVariant variant,
                     double vert_azimuth_override = std::nan("")) {
  const double horiz = std::sin(bear.azimuth) * std::sin(bear.elevation);
  double vert;
  if (variant == SteeringVariant::corrected) {
    vert = std::cos(bear.elevation);
  } else {
    const double az = std::isnan(vert_azimuth_override) ? bear.azimuth
                                                        : vert_azimuth_override;
    vert = std::cos(az);
  }
  return kron(steering_1d(n_h, spacing, horiz, lambda),
              steering_1d(n_v, spacing, vert, lambda));
}

}  // namespace

ChannelSet build_channels(const AngleSet& angles, const GridSpec& grid,
                          const RisSpec& ris, double lambda,
                          SteeringVariant variant, const LinkGains& gains) {
  grid.validate();
  ris.validate();
  if (!(lambda > 0)) throw std::invalid_argument("wavelength must be positive");

  const double d_bs = grid.spacing(lambda);
  const double d_ris = ris.spacing(lambda);

  ChannelSet ch;
  // BS-side departure factor of G and the RIS-side arrival factor g.
  const CVec t_bs = planar_steering(angles.bs_to_ris, grid.nx, grid.nz, d_bs,
                                    lambda, variant);
  ch.g = planar_steering(angles.ris_from_bs, ris.my, ris.mz, d_ris, lambda, variant);
  ch.G = gains.bs_ris * (ch.g * t_bs.transpose());  // M x N, rank 1

  ch.f_u = gains.ris_bob * planar_steering(angles.ris_to_bob, ris.my, ris.mz,
                                           d_ris, lambda, variant);
  // The printed form reuses Bob's azimuth in Eve's vertical factor.
  const double eve_vert_az = variant == SteeringVariant::printed
                                 ? angles.ris_to_bob.azimuth
                                 : std::nan("");
  ch.f_e = gains.ris_eve * planar_steering(angles.ris_to_eve, ris.my, ris.mz,
                                           d_ris, lambda, variant, eve_vert_az);

  ch.h_u = gains.bs_bob * planar_steering(angles.bs_to_bob, grid.nx, grid.nz,
                                          d_bs, lambda, variant);
  ch.h_e = gains.bs_eve * planar_steering(angles.bs_to_eve, grid.nx, grid.nz,
                                          d_bs, lambda, variant);
  return ch;
}

CVec aggregate_channel(const ChannelSet& ch, const CVec& varpi, const CVec& f,
                       const CVec& h) {
  if (varpi.size() != f.size() || f.size() != ch.G.rows() ||
      h.size() != ch.G.cols()) {
    throw std::invalid_argument("aggregate_channel: dimension mismatch");
  }
  // (f^H diag(varpi) G)^T + h
  const CVec fw = f.conjugate().cwiseProduct(varpi);
  return ch.G.transpose() * fw + h;
}

std::pair<CVec, CVec> draw_csi_error(int n, const CsiError& err) {
  if (err.var_u < 0 || err.var_e < 0) {
    throw std::invalid_argument("error variances must be >= 0");
  }
  Rng rng(err.seed);
  CVec eu(n), ee(n);
  for (int i = 0; i < n; ++i) eu[i] = rng.cgaussian(1.0);
  for (int i = 0; i < n; ++i) ee[i] = rng.cgaussian(1.0);
  return {std::sqrt(err.var_u) * eu, std::sqrt(err.var_e) * ee};
}

std::pair<CVec, CVec> perturb_csi(const ChannelSet& ch, const CVec& varpi,
                                  const CsiError& err) {
  auto [eu, ee] = draw_csi_error(ch.n(), err);
  CVec qu = aggregate_channel(ch, varpi, ch.f_u, ch.h_u) + eu;
  CVec qe = aggregate_channel(ch, varpi, ch.f_e, ch.h_e) + ee;
  return {std::move(qu), std::move(qe)};
}

}  // namespace risdm
