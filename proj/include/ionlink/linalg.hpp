#pragma once

#include <Eigen/Dense>

#include "ionlink/common.hpp"

namespace ionlink {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using Vec4 = Eigen::Vector4cd;

inline MatX dagger(const MatX& m) { return m.adjoint(); }

inline bool is_unitary(const MatX& u, double tol = 1e-10) {
  return (u.adjoint() * u - MatX::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

inline double max_abs_diff(const MatX& a, const MatX& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Distance up to global phase: min_phi || a - e^{i phi} b ||_max.
inline double phase_insensitive_diff(const MatX& a, const MatX& b) {
  cd ip = (b.adjoint() * a).trace();
  cd phase = std::abs(ip) > 1e-14 ? ip / std::abs(ip) : cd(1.0, 0.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

// Deterministic completion of a unit vector to a unitary whose first column
// is that vector (Gram-Schmidt against the computational basis).
inline MatX unitary_from_first_column(const VecX& v) {
  const Eigen::Index d = v.size();
  MatX u(d, d);
  u.col(0) = v / v.norm();
  Eigen::Index have = 1;
  for (Eigen::Index i = 0; i < d && have < d; ++i) {
    VecX w = VecX::Zero(d);
    w(i) = 1.0;
    for (Eigen::Index c = 0; c < have; ++c) w -= (u.col(c).dot(w)) * u.col(c);
    if (w.norm() > 1e-3) u.col(have++) = w / w.norm();
  }
  if (have != d) throw std::runtime_error("unitary completion failed");
  return u;
}

inline MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace ionlink
