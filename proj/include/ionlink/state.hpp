#pragma once

#include <vector>

#include "ionlink/gates.hpp"
#include "ionlink/linalg.hpp"
#include "ionlink/qubit.hpp"
#include "ionlink/rng.hpp"

namespace ionlink {

enum class Basis { kX, kY, kZ };

class KrausChannel;

// State over an ordered set of labeled qubits. Little-endian: the first
// qubit in the (lexicographically sorted) list is the least significant
// index bit. Starts as an amplitude vector; the first noisy channel
// promotes it to a density matrix for the rest of its life.
class QuantumState {
 public:
  QuantumState() = default;

  // All qubits in |0>.
  static QuantumState ground(std::vector<QubitId> qubits);
  static QuantumState from_vector(std::vector<QubitId> qubits, VecX amplitudes);
  static QuantumState from_density(std::vector<QubitId> qubits, MatX rho);

  int num_qubits() const { return static_cast<int>(qubits_.size()); }
  Eigen::Index dim() const { return Eigen::Index(1) << num_qubits(); }
  bool is_pure_repr() const { return pure_; }
  const std::vector<QubitId>& qubits() const { return qubits_; }
  bool has_qubit(QubitId q) const;
  int bit_position(QubitId q) const;  // throws on unknown qubit

  // u is 2^k x 2^k acting on `targets` (targets[0] = least significant bit
  // of u's index space).
  void apply_unitary(const MatX& u, const std::vector<QubitId>& targets);
  void apply_channel(const KrausChannel& ch, const std::vector<QubitId>& targets);

  // Monte-Carlo unraveling: samples one Kraus operator by its Born weight
  // and applies it normalized. Keeps a pure state pure; on a density
  // representation it falls back to the deterministic channel.
  void apply_channel_sampled(const KrausChannel& ch, const std::vector<QubitId>& targets,
                             Rng& rng);

  // Projective measurement after rotating `basis` to the computational one.
  // The target stays in the state, collapsed to a computational eigenstate.
  int measure(QubitId target, Basis basis, Rng& rng);

  // Density-matrix state over `keep` (original invariants re-checked).
  QuantumState partial_trace(const std::vector<QubitId>& keep) const;

  // Tensor a fresh |0> qubit into the state at its sorted position.
  void insert_qubit(QubitId q);

  // Remove a qubit known to be in computational eigenstate `outcome`
  // (e.g. just measured). Exact slice; keeps a pure state pure.
  void remove_qubit(QubitId q, int outcome);

  // Force the density representation (no-op if already there).
  void promote();
  MatX density() const;
  const VecX& vector() const;  // throws if already promoted

  // Overlap with a pure reference state on the same qubit set:
  // |<ref|psi>|^2 or <ref|rho|ref>.
  double fidelity_with_pure(const VecX& ref) const;

  double norm_error() const;  // |norm - 1| (vector) or |trace - 1| (matrix)

  // Relabel a qubit (same position semantics re-derived from sorted order).
  void relabel(QubitId from, QubitId to);

 private:
  void check_invariants() const;
  MatX embed(const MatX& u, const std::vector<QubitId>& targets) const;

  std::vector<QubitId> qubits_;
  VecX vec_;
  MatX rho_;
  bool pure_ = true;
};

}  // namespace ionlink
