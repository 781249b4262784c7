// SPDX-License-Identifier: Apache-2.0
//
// Far-field geometry: node positions to azimuth/elevation bearings.
//
// Convention: for a direction vector (x, y, z),
//   azimuth   = atan2(y, x)        in (-pi, pi]
//   elevation = arccos(z / ||.||)  in [0, pi]
// All links share the convention, so a global azimuth offset cancels out of
// every rate expression.

#ifndef RISDM_GEOMETRY_HPP
#define RISDM_GEOMETRY_HPP

#include <Eigen/Dense>

#include "risdm/types.hpp"

namespace risdm {

struct NodeLayout {
  Eigen::Vector3d bs{0.0, 0.0, 0.0};
  Eigen::Vector3d ris{-100.0, 1000.0, -10.0};
  Eigen::Vector3d bob{500.0, 1200.0, -50.0};
  Eigen::Vector3d eve{400.0, 900.0, -50.0};
  double carrier_hz = 25e9;

  double wavelength() const { return kSpeedOfLight / carrier_hz; }

  /// Throws std::invalid_argument on coincident nodes or non-positive carrier.
  void validate() const;
};

struct Bearing {
  double azimuth = 0.0;    // radians, (-pi, pi]
  double elevation = 0.0;  // radians, [0, pi]
};

struct AngleSet {
  Bearing bs_to_ris;    // departure at the BS towards the RIS
  Bearing ris_from_bs;  // arrival at the RIS from the BS
  Bearing ris_to_bob;
  Bearing ris_to_eve;
  Bearing bs_to_bob;
  Bearing bs_to_eve;
};

/// Bearing of the direction from `from` towards `to`.
/// Throws std::invalid_argument when the points coincide.
Bearing bearing_between(const Eigen::Vector3d& from, const Eigen::Vector3d& to);

AngleSet derive_angles(const NodeLayout& layout);

}  // namespace risdm

#endif
