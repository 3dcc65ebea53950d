#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ionlink/noise.hpp"
#include "ionlink/rng.hpp"
#include "ionlink/state.hpp"

namespace ionlink {

// Timing structure of heralded entanglement generation: attempts run
// back-to-back inside a block; a recooling pause separates blocks.
struct AttemptSchedule {
  double attempt_duration = 1.0;  // us per attempt
  int attempts_per_block = 1;
  double recool_duration = 0.0;   // us between blocks
  double success_prob = 1.0;      // per attempt
  std::int64_t attempt_cap = 0;   // 0 = unbounded

  void validate() const;

  // Exact elapsed model time for a herald on attempt `attempts`.
  double elapsed_for(std::int64_t attempts) const;

  // Closed-form expected herald rate 1/E[elapsed]:
  // E[elapsed] = t_a/p + t_r q^B / (1 - q^B), q = 1 - p.
  double mean_rate() const;
};

struct HeraldRecord {
  std::int64_t attempts = 0;
  double elapsed = 0.0;
  std::array<std::int64_t, 2> dd_pulses_applied{0, 0};  // filled by the runtime
  QuantumState state;  // the two network qubits
};

// One try-until-success campaign. nullopt only when attempt_cap was hit;
// the sampled Bell state is then discarded untouched.
std::optional<HeraldRecord> generate_entanglement(const AttemptSchedule& schedule,
                                                  const BellNoise& bell,
                                                  QubitId qa, QubitId qb, Rng& rng);

// E[exp(-gamma * elapsed)] under the schedule's herald-time distribution
// (geometric attempts, exact block arithmetic).
double expected_decay_factor(const AttemptSchedule& schedule, double gamma);

}  // namespace ionlink
