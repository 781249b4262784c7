// SPDX-License-Identifier: Apache-2.0
//
// Steering-vector channel synthesis for the planar MA grid at the BS and the
// planar RIS, plus the additive channel-estimation error model.
//
// Every link is a single far-field path, so each channel is a pure phase
// steering vector (unit-modulus entries) and the BS-RIS matrix G is rank one.
// Optional per-link scalar gains are provided for sensitivity studies and
// default to 1.

#ifndef RISDM_CHANNELS_HPP
#define RISDM_CHANNELS_HPP

#include <cstdint>
#include <utility>

#include "risdm/geometry.hpp"
#include "risdm/types.hpp"

namespace risdm {

struct GridSpec {
  int nx = 9;            // candidate positions along x
  int nz = 9;            // candidate positions along z
  double spacing_m = 0;  // grid pitch d; <=0 means half a wavelength

  int count() const { return nx * nz; }
  double spacing(double lambda) const { return spacing_m > 0 ? spacing_m : lambda / 2.0; }
  void validate() const;
};

struct RisSpec {
  int my = 64;
  int mz = 64;
  double eta = 1.5;      // maximum amplification factor, >= 0
  double spacing_m = 0;  // element pitch; <=0 means half a wavelength

  int count() const { return my * mz; }
  double spacing(double lambda) const { return spacing_m > 0 ? spacing_m : lambda / 2.0; }
  void validate() const;
};

/// The vertical steering factor as printed uses the cosine of the azimuth;
/// `corrected` replaces it with the cosine of the elevation and keeps the
/// eavesdropper link on its own azimuth. Secrecy-rate trends are insensitive
/// to the choice; absolute values differ.
enum class SteeringVariant { corrected, printed };

struct LinkGains {
  double bs_ris = 1.0;
  double ris_bob = 1.0;
  double ris_eve = 1.0;
  double bs_bob = 1.0;
  double bs_eve = 1.0;
};

struct ChannelSet {
  CMat G;         // M x N, BS grid -> RIS
  CVec f_u, f_e;  // M, RIS -> Bob / Eve
  CVec h_u, h_e;  // N, BS grid -> Bob / Eve
  CVec g;         // M, RIS-side arrival factor of G

  int m() const { return static_cast<int>(f_u.size()); }
  int n() const { return static_cast<int>(h_u.size()); }
};

/// One-dimensional steering kernel: entry k = exp(j 2 pi k d phase_arg / lambda).
CVec steering_1d(int count, double spacing_m, double phase_arg, double lambda);

ChannelSet build_channels(const AngleSet& angles, const GridSpec& grid,
                          const RisSpec& ris, double lambda,
                          SteeringVariant variant = SteeringVariant::corrected,
                          const LinkGains& gains = {});

/// Aggregated channel q = f^H diag(varpi) G + h^T, returned as its N entries.
CVec aggregate_channel(const ChannelSet& ch, const CVec& varpi, const CVec& f,
                       const CVec& h);

struct CsiError {
  double var_u = 0.0;  // per-entry complex variance of Bob's aggregate error
  double var_e = 0.0;
  std::uint64_t seed = 0;
};

/// Draws the error vectors (unit variance per entry, scaled afterwards) so
/// that sweeping the variance with a fixed seed perturbs along a common
/// direction.
std::pair<CVec, CVec> draw_csi_error(int n, const CsiError& err);

/// Aggregates under the given PSM plus a seeded error draw. Zero variance
/// returns the exact aggregates.
std::pair<CVec, CVec> perturb_csi(const ChannelSet& ch, const CVec& varpi,
                                  const CsiError& err);

}  // namespace risdm

#endif
