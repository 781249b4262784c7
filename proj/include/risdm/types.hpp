// SPDX-License-Identifier: Apache-2.0
//
// Common linear-algebra aliases used across the library.

#ifndef RISDM_TYPES_HPP
#define RISDM_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace risdm {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using IVec = Eigen::VectorXi;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Row-vector style product q*w without conjugation (q holds the entries of a
/// 1xN row channel).
inline cplx row_dot(const CVec& q, const CVec& w) {
  return (q.array() * w.array()).sum();
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

}  // namespace risdm

#endif
