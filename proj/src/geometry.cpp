// SPDX-License-Identifier: Apache-2.0

#include "risdm/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace risdm {

void NodeLayout::validate() const {
  if (!(carrier_hz > 0.0)) {
    throw std::invalid_argument("carrier frequency must be positive");
  }
  const Eigen::Vector3d* nodes[4] = {&bs, &ris, &bob, &eve};
  const char* names[4] = {"bs", "ris", "bob", "eve"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if ((*nodes[i] - *nodes[j]).norm() < 1e-9) {
        throw std::invalid_argument(std::string("coincident node positions: ") +
                                    names[i] + " and " + names[j]);
      }
    }
  }
}

Bearing bearing_between(const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
  const Eigen::Vector3d d = to - from;
  const double r = d.norm();
  if (r < 1e-12) {
    throw std::invalid_argument("degenerate geometry: coincident positions");
  }
  Bearing b;
  b.azimuth = std::atan2(d.y(), d.x());
  if (b.azimuth <= -kPi) b.azimuth = kPi;  // keep range (-pi, pi]
  double cz = d.z() / r;
  cz = std::clamp(cz, -1.0, 1.0);
  b.elevation = std::acos(cz);
  return b;
}

AngleSet derive_angles(const NodeLayout& layout) {
  layout.validate();
  AngleSet a;
  a.bs_to_ris = bearing_between(layout.bs, layout.ris);
  a.ris_from_bs = bearing_between(layout.ris, layout.bs);
  a.ris_to_bob = bearing_between(layout.ris, layout.bob);
  a.ris_to_eve = bearing_between(layout.ris, layout.eve);
  a.bs_to_bob = bearing_between(layout.bs, layout.bob);
  a.bs_to_eve = bearing_between(layout.bs, layout.eve);
  return a;
}

}  // namespace risdm
