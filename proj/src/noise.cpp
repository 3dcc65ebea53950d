#include "ionlink/noise.hpp"

#include <cmath>

#include "ionlink/channels.hpp"
#include "ionlink/common.hpp"

namespace ionlink {

Mat2 SpamPovm::m0() const {
  Mat2 m = Mat2::Zero();
  m(0, 0) = 1.0 - eps0;
  m(1, 1) = eps1;
  return m;
}

Mat2 SpamPovm::m1() const {
  Mat2 m = Mat2::Zero();
  m(0, 0) = eps0;
  m(1, 1) = 1.0 - eps1;
  return m;
}

void SpamPovm::validate() const {
  if (eps0 < 0 || eps0 > 1 || eps1 < 0 || eps1 > 1)
    throw ConfigError("SPAM probabilities must lie in [0,1]");
}

double BellNoise::psi_plus_fidelity() const {
  return (1.0 - werner_p) * (1.0 - dephasing_q / 2.0) + werner_p / 4.0;
}

void BellNoise::validate() const {
  if (werner_p < 0 || werner_p > 1) throw ConfigError("bell werner_p outside [0,1]");
  if (dephasing_q < 0 || dephasing_q > 1) throw ConfigError("bell dephasing_q outside [0,1]");
}

const SpamPovm& ModuleNoise::spam(Role r) const {
  switch (r) {
    case Role::kNetwork: return spam_network;
    case Role::kCircuit: return spam_circuit;
    default: return spam_aux;
  }
}

double ModuleNoise::network_readout_flip(int m) const {
  const double spam_flip = m == 0 ? spam_network.eps0 : spam_network.eps1;
  const double det = detection_error(detection_duration, detection_error_base,
                                     network_lifetime);
  return spam_flip * (1.0 - det) + det * (1.0 - spam_flip);
}

void ModuleNoise::validate() const {
  spam_network.validate();
  spam_circuit.validate();
  spam_aux.validate();
  auto prob = [](double p, const char* what) {
    if (p < 0 || p > 1) throw ConfigError(std::string(what) + " outside [0,1]");
  };
  prob(cz_depol, "cz_depol");
  prob(transfer_depol, "transfer_depol");
  prob(rotation_depol, "rotation_depol");
  prob(detection_error_base, "detection_error_base");
  if (detection_duration < 0) throw ConfigError("detection duration must be >= 0");
  if (network_lifetime <= 0) throw ConfigError("network lifetime must be positive");
  if (memory_dephasing_rate < 0) throw ConfigError("memory dephasing rate must be >= 0");
  if (quasistatic_sigma < 0) throw ConfigError("quasistatic sigma must be >= 0");
}

void NoiseModel::validate() const {
  bell.validate();
  alice.validate();
  bob.validate();
}

bool NoiseModel::is_noiseless() const {
  auto mod_zero = [](const ModuleNoise& m) {
    return m.spam_network.eps0 == 0 && m.spam_network.eps1 == 0 &&
           m.spam_circuit.eps0 == 0 && m.spam_circuit.eps1 == 0 &&
           m.spam_aux.eps0 == 0 && m.spam_aux.eps1 == 0 && m.cz_depol == 0 &&
           m.transfer_depol == 0 && m.rotation_depol == 0 &&
           m.detection_error_base == 0 && m.detection_duration == 0 &&
           m.memory_dephasing_rate == 0 && m.quasistatic_sigma == 0;
  };
  return bell.werner_p == 0 && bell.dephasing_q == 0 && mod_zero(alice) && mod_zero(bob);
}

std::pair<double, double> povm_outcome_probabilities(const QuantumState& state,
                                                     QubitId target,
                                                     const SpamPovm& spam) {
  QuantumState red = state.partial_trace({target});
  MatX rho = red.density();
  double p0 = (MatX(spam.m0()) * rho).trace().real();
  double p1 = (MatX(spam.m1()) * rho).trace().real();
  return {p0, p1};
}

double detection_error(double duration, double base, double lifetime) {
  double p = base + (1.0 - std::exp(-duration / lifetime));
  return std::min(p, 1.0);
}

QuantumState noisy_bell_state(const BellNoise& bn, QubitId qa, QubitId qb) {
  bn.validate();
  Vec4 psi = gates::psi_plus();
  MatX rho = (1.0 - bn.werner_p) * (psi * psi.adjoint()).eval() +
             bn.werner_p * MatX::Identity(4, 4) / 4.0;
  if (bn.dephasing_q > 0.0) {
    // Z-dephasing on one arm with flip probability q/2 damps the
    // |01><10| coherence by (1-q).
    MatX zi = kron(gates::id2(), gates::z());  // Z on the low-order qubit
    rho = (1.0 - bn.dephasing_q / 2.0) * rho + (bn.dephasing_q / 2.0) * zi * rho * zi;
  }
  std::vector<QubitId> qs = {qa, qb};
  return QuantumState::from_density(qs, rho);
}

Vec4 sample_noisy_bell(const BellNoise& bn, Rng& rng) {
  bn.validate();
  const double r = 1.0 / std::sqrt(2.0);
  Vec4 v = gates::psi_plus();
  if (rng.uniform() < bn.werner_p) {
    // I/4 as an equal mixture of the four Bell states.
    switch (rng.below(4)) {
      case 0: v = Vec4::Zero(); v(0) = r; v(3) = r; break;   // Phi+
      case 1: v = Vec4::Zero(); v(0) = r; v(3) = -r; break;  // Phi-
      case 2: break;                                         // Psi+
      default: v = Vec4::Zero(); v(1) = r; v(2) = -r; break; // Psi-
    }
  }
  if (rng.uniform() < bn.dephasing_q / 2.0) {
    v(1) *= -1.0;  // Z on the low-order arm
    v(3) *= -1.0;
  }
  return v;
}

}  // namespace ionlink
