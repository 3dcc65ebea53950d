#include "ionlink/pauli.hpp"

#include <stdexcept>

namespace ionlink {

PauliString PauliString::from_flat_index(int alpha, int n) {
  PauliString p;
  p.factors.resize(n);
  for (int k = 0; k < n; ++k) {
    p.factors[k] = alpha % 4;
    alpha /= 4;
  }
  return p;
}

int PauliString::flat_index() const {
  int idx = 0;
  for (size_t k = factors.size(); k-- > 0;) idx = idx * 4 + factors[k];
  return idx;
}

MatX PauliString::matrix() const {
  MatX m = MatX::Identity(1, 1);
  // factors[0] is the least significant bit -> rightmost kron factor.
  for (size_t k = factors.size(); k-- > 0;) m = kron(m, pauli1(factors[k]));
  return m;
}

std::string PauliString::str() const {
  static const char names[] = "IXYZ";
  std::string s;
  for (int f : factors) s += names[f];
  return s;
}

std::vector<cd> pauli_expansion(const MatX& m) {
  Eigen::Index d = m.rows();
  if (d != m.cols() || d == 0 || (d & (d - 1)) != 0)
    throw std::invalid_argument("pauli_expansion needs a square power-of-two matrix");
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  const int count = 1 << (2 * n);
  std::vector<cd> coeffs(count);
  for (int alpha = 0; alpha < count; ++alpha) {
    MatX p = PauliString::from_flat_index(alpha, n).matrix();
    coeffs[alpha] = (p.adjoint() * m).trace() / static_cast<double>(d);
  }
  return coeffs;
}

MatX pauli_reconstruct(const std::vector<cd>& coeffs, int n) {
  const Eigen::Index d = Eigen::Index(1) << n;
  MatX m = MatX::Zero(d, d);
  for (size_t alpha = 0; alpha < coeffs.size(); ++alpha)
    m += coeffs[alpha] * PauliString::from_flat_index(static_cast<int>(alpha), n).matrix();
  return m;
}

}  // namespace ionlink
