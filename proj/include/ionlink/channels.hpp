#pragma once

#include <vector>

#include "ionlink/linalg.hpp"

namespace ionlink {

// Completely positive trace-preserving map in Kraus form.
class KrausChannel {
 public:
  KrausChannel() = default;
  explicit KrausChannel(std::vector<MatX> ops) : ops_(std::move(ops)) {}

  const std::vector<MatX>& operators() const { return ops_; }
  Eigen::Index dim() const { return ops_.empty() ? 0 : ops_[0].rows(); }

  // Throws unless sum K^dag K = I within 1e-10.
  void check() const;

  MatX apply(const MatX& rho) const;

  // Choi matrix J = sum_k (I (x) K_k) |Omega><Omega| (I (x) K_k)^dag,
  // normalized so Tr J = d. Column-stacking convention: J = sum vec(K) vec(K)^dag
  // with vec(K) the column-major flattening.
  MatX choi() const;

  static KrausChannel identity(int n);
  // rho -> (1-p) rho + p I/2^n.
  static KrausChannel depolarizing(double p, int n);
  // rho -> (1-p) rho + p Z rho Z (single qubit).
  static KrausChannel dephasing(double p);
  // Dephasing with a target off-diagonal damping factor f = e^{-rate*t}.
  static KrausChannel dephasing_with_coherence(double f);
  static KrausChannel unitary(const MatX& u);

 private:
  std::vector<MatX> ops_;
};

// Channel composition helpers on density matrices of fixed dimension.
MatX apply_channel_matrix(const std::vector<MatX>& kraus, const MatX& rho);

}  // namespace ionlink
