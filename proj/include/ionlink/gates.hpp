#pragma once

#include <cmath>

#include "ionlink/linalg.hpp"

namespace ionlink {
namespace gates {

inline Mat2 id2() { return Mat2::Identity(); }

inline Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Mat2 y() {
  Mat2 m;
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}

inline Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

inline Mat2 h() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

// S = diag(1, i).
inline Mat2 s() {
  Mat2 m;
  m << 1, 0, 0, cd(0, 1);
  return m;
}

inline Mat2 sdg() { return s().adjoint(); }

inline Mat2 rx(double t) {
  double c = std::cos(t / 2), sn = std::sin(t / 2);
  Mat2 m;
  m << c, cd(0, -sn), cd(0, -sn), c;
  return m;
}

inline Mat2 ry(double t) {
  double c = std::cos(t / 2), sn = std::sin(t / 2);
  Mat2 m;
  m << c, -sn, sn, c;
  return m;
}

inline Mat2 rz(double t) {
  Mat2 m;
  m << std::exp(cd(0, -t / 2)), 0, 0, std::exp(cd(0, t / 2));
  return m;
}

// pi rotation about the equatorial axis at azimuth phi:
// P(phi) = -i (cos(phi) X + sin(phi) Y).
inline Mat2 pi_pulse(double phi) {
  Mat2 m;
  m << 0, cd(0, -1) * std::exp(cd(0, -phi)), cd(0, -1) * std::exp(cd(0, phi)), 0;
  return m;
}

inline Mat4 cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

// Control = high-order qubit of the 4x4 index (row index = 2*ctrl + tgt).
inline Mat4 cx() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

inline Mat4 swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

inline Mat4 iswap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(3, 3) = 1;
  m(1, 2) = m(2, 1) = cd(0, 1);
  return m;
}

// (|01> + |10>)/sqrt(2).
inline Vec4 psi_plus() {
  Vec4 v = Vec4::Zero();
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

// ZYZ Euler angles: u = e^{i alpha} Rz(phi) Ry(theta) Rz(lambda).
struct Euler {
  double alpha, phi, theta, lambda;
};

inline Euler zyz_angles(const Mat2& u) {
  cd det = u.determinant();
  double alpha = std::arg(det) / 2;
  Mat2 su = u * std::exp(cd(0, -alpha));
  double a00 = std::min(1.0, std::abs(su(0, 0)));
  Euler e;
  e.alpha = alpha;
  e.theta = 2 * std::acos(a00);
  if (std::abs(su(0, 0)) > 1e-12 && std::abs(su(1, 0)) > 1e-12) {
    e.phi = std::arg(su(1, 1)) + std::arg(su(1, 0));
    e.lambda = std::arg(su(1, 1)) - std::arg(su(1, 0));
  } else if (std::abs(su(0, 0)) <= 1e-12) {
    e.phi = 2 * std::arg(su(1, 0));
    e.lambda = 0.0;
    e.theta = kPi;
  } else {
    e.phi = 2 * std::arg(su(1, 1));
    e.lambda = 0.0;
    e.theta = 0.0;
  }
  return e;
}

}  // namespace gates
}  // namespace ionlink
