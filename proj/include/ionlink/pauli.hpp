#pragma once

#include <string>
#include <vector>

#include "ionlink/gates.hpp"
#include "ionlink/linalg.hpp"

namespace ionlink {

// Tensor product of single-qubit Paulis. factors[0] acts on the least
// significant index bit, matching the state convention.
struct PauliString {
  std::vector<int> factors;  // 0=I, 1=X, 2=Y, 3=Z

  static PauliString from_flat_index(int alpha, int n);
  int flat_index() const;  // sum_k factors[k] * 4^k
  MatX matrix() const;
  std::string str() const;  // e.g. "XZ" = X on qubit 0, Z on qubit 1
};

inline const Mat2& pauli1(int k) {
  static const Mat2 table[4] = {gates::id2(), gates::x(), gates::y(), gates::z()};
  return table[k];
}

// c_alpha = Tr(P_alpha^dag m) / 2^n with sum_alpha c_alpha P_alpha = m.
std::vector<cd> pauli_expansion(const MatX& m);

// Inverse of pauli_expansion.
MatX pauli_reconstruct(const std::vector<cd>& coeffs, int n);

}  // namespace ionlink
