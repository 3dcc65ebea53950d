#pragma once

#include <utility>
#include <vector>

#include "ionlink/linalg.hpp"

namespace ionlink {

// Two-qubit 4x4 matrices in this module index the basis as |ab> with the
// first ("a") qubit in the most significant bit: row = 2*a + b.

// Canonical interaction exp(i (-y XX - x YY + z ZZ)), a fixed local-frame
// relabeling of the usual exp(i (x XX + y YY + z ZZ)) representative.
Mat4 canonical_gate(double x, double y, double z);

// U = e^{i phase} (k1a (x) k1b) . canonical_gate(coords) . (k2a (x) k2b),
// with coords in the reduced chamber pi/4 >= x >= y >= |z|.
struct WeylDecomposition {
  double phase = 0;
  Mat2 k1a, k1b;
  Mat2 k2a, k2b;
  Eigen::Vector3d coords;

  Mat4 reconstruct() const;
};

WeylDecomposition weyl_decompose(const Mat4& u);

// Minimal number of CZ gates needed to realize a gate with the given
// canonical coordinates, up to single-qubit rotations:
//   0  local (all coords ~ 0)
//   1  CZ class (x ~ pi/4, y ~ z ~ 0)
//   2  any other gate with z ~ 0 (partial entanglers included)
//   3  everything else
int min_cz_count(const Eigen::Vector3d& coords, double tol = 1e-7);

// U = e^{i phase} L0 CZ L1 CZ ... CZ Ln with Lk = layers[k].first (x)
// layers[k].second; cz_count() = layers.size() - 1.
struct CzLayerCircuit {
  double phase = 0;
  std::vector<std::pair<Mat2, Mat2>> layers;

  int cz_count() const { return static_cast<int>(layers.size()) - 1; }
  Mat4 matrix() const;
};

// Exact minimal-CZ synthesis of an arbitrary two-qubit unitary.
CzLayerCircuit synthesize_two_qubit(const Mat4& u);

}  // namespace ionlink
