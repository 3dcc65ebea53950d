#include "ionlink/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "ionlink/pauli.hpp"

namespace ionlink {

void KrausChannel::check() const {
  if (ops_.empty()) throw std::invalid_argument("channel has no Kraus operators");
  const Eigen::Index d = ops_[0].rows();
  MatX acc = MatX::Zero(d, d);
  for (const MatX& k : ops_) {
    if (k.rows() != d || k.cols() != d)
      throw std::invalid_argument("Kraus operators have inconsistent dimensions");
    acc += k.adjoint() * k;
  }
  if ((acc - MatX::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("channel is not trace preserving");
}

MatX KrausChannel::apply(const MatX& rho) const {
  MatX out = MatX::Zero(rho.rows(), rho.cols());
  for (const MatX& k : ops_) out += k * rho * k.adjoint();
  return out;
}

MatX KrausChannel::choi() const {
  const Eigen::Index d = dim();
  MatX j = MatX::Zero(d * d, d * d);
  for (const MatX& k : ops_) {
    VecX v(d * d);
    for (Eigen::Index c = 0; c < d; ++c)
      for (Eigen::Index r = 0; r < d; ++r) v(c * d + r) = k(r, c);
    j += v * v.adjoint();
  }
  return j;
}

KrausChannel KrausChannel::identity(int n) {
  return KrausChannel({MatX::Identity(Eigen::Index(1) << n, Eigen::Index(1) << n)});
}

KrausChannel KrausChannel::depolarizing(double p, int n) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing probability outside [0,1]");
  if (n != 1 && n != 2) throw std::invalid_argument("depolarizing channel supports 1 or 2 qubits");
  if (p == 0.0) return identity(n);
  const int count = 1 << (2 * n);
  std::vector<MatX> ops;
  ops.reserve(count);
  // (1-p) rho + p I/2^n  ==  (1-p+p/4^n) rho + (p/4^n) sum_{alpha != 0} P rho P
  const double w0 = 1.0 - p + p / count;
  ops.push_back(std::sqrt(w0) * MatX::Identity(Eigen::Index(1) << n, Eigen::Index(1) << n));
  for (int alpha = 1; alpha < count; ++alpha)
    ops.push_back(std::sqrt(p / count) * PauliString::from_flat_index(alpha, n).matrix());
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::dephasing(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("dephasing probability outside [0,1]");
  std::vector<MatX> ops;
  ops.push_back(std::sqrt(1.0 - p) * MatX(gates::id2()));
  if (p > 0.0) ops.push_back(std::sqrt(p) * MatX(gates::z()));
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::dephasing_with_coherence(double f) {
  if (f < -1.0 || f > 1.0) throw std::invalid_argument("coherence factor outside [-1,1]");
  // Off-diagonals scale by 1 - 2p = f.
  return dephasing((1.0 - f) / 2.0);
}

KrausChannel KrausChannel::unitary(const MatX& u) {
  if (!is_unitary(u)) throw std::invalid_argument("not a unitary");
  return KrausChannel({u});
}

MatX apply_channel_matrix(const std::vector<MatX>& kraus, const MatX& rho) {
  MatX out = MatX::Zero(rho.rows(), rho.cols());
  for (const MatX& k : kraus) out += k * rho * k.adjoint();
  return out;
}

}  // namespace ionlink
