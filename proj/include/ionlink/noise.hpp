#pragma once

#include "ionlink/linalg.hpp"
#include "ionlink/qubit.hpp"
#include "ionlink/state.hpp"

namespace ionlink {

// Computational-basis measurement deformed by state-preparation/readout
// errors: M0 = (1-eps0)|0><0| + eps1|1><1|, M1 = I - M0.
struct SpamPovm {
  double eps0 = 0.0;
  double eps1 = 0.0;

  Mat2 m0() const;
  Mat2 m1() const;
  void validate() const;
};

// Bell-pair imperfection: Werner admixture plus extra damping of the
// |01><10| coherence.
struct BellNoise {
  double werner_p = 0.0;
  double dephasing_q = 0.0;

  // <Psi+| rho |Psi+> = (1-p)(1-q/2) + p/4.
  double psi_plus_fidelity() const;
  void validate() const;
};

// Noise parameters for one module.
struct ModuleNoise {
  SpamPovm spam_network, spam_circuit, spam_aux;
  double cz_depol = 0.0;             // 2-qubit depolarizing after each local CZ
  double transfer_depol = 0.0;       // 1-qubit depolarizing per transfer
  double rotation_depol = 0.0;       // 1-qubit depolarizing on basis rotations
  double detection_error_base = 0.0;
  double detection_duration = 0.0;   // fluorescence window, microseconds
  double network_lifetime = 3.9e5;   // microseconds
  double memory_dephasing_rate = 0.0;  // 1/us; coherence decays as e^{-rate*t}
  double quasistatic_sigma = 0.0;      // rad/us; per-campaign static detuning spread

  const SpamPovm& spam(Role r) const;
  // Reported-bit flip probability for a network-qubit fluorescence readout
  // of true outcome `m`: SPAM asymmetry composed with the detection-window
  // decay term.
  double network_readout_flip(int m) const;
  void validate() const;
};

struct NoiseModel {
  BellNoise bell;
  ModuleNoise alice, bob;

  const ModuleNoise& mod(Module m) const { return m == Module::kAlice ? alice : bob; }
  ModuleNoise& mod(Module m) { return m == Module::kAlice ? alice : bob; }
  void validate() const;
  bool is_noiseless() const;
};

// (p0, p1) for measuring `target` of `state` through the POVM.
std::pair<double, double> povm_outcome_probabilities(const QuantumState& state,
                                                     QubitId target,
                                                     const SpamPovm& spam);

// base + shelved-state decay during the detection window.
double detection_error(double duration, double base, double lifetime);

// Two-qubit density matrix delivered by a heralded entanglement attempt.
QuantumState noisy_bell_state(const BellNoise& bn, QubitId qa, QubitId qb);

// One pure-state sample whose mixture over the RNG reproduces
// noisy_bell_state exactly (Werner branch, then one-arm phase flip).
Vec4 sample_noisy_bell(const BellNoise& bn, Rng& rng);

}  // namespace ionlink
