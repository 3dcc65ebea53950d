#include "ionlink/link.hpp"

#include <cmath>

#include "ionlink/common.hpp"

namespace ionlink {

void AttemptSchedule::validate() const {
  if (attempt_duration <= 0) throw ConfigError("attempt_duration must be > 0");
  if (attempts_per_block <= 0) throw ConfigError("attempts_per_block must be > 0");
  if (recool_duration < 0) throw ConfigError("recool_duration must be >= 0");
  if (!(success_prob > 0) || success_prob > 1)
    throw ConfigError("success_prob must lie in (0,1]");
  if (attempt_cap < 0) throw ConfigError("attempt_cap must be >= 0");
}

double AttemptSchedule::elapsed_for(std::int64_t attempts) const {
  const std::int64_t completed_recools = (attempts - 1) / attempts_per_block;
  return static_cast<double>(attempts) * attempt_duration +
         static_cast<double>(completed_recools) * recool_duration;
}

double AttemptSchedule::mean_rate() const {
  validate();
  const double q = 1.0 - success_prob;
  const double qb = std::pow(q, attempts_per_block);
  double expected = attempt_duration / success_prob;
  if (qb > 0) expected += recool_duration * qb / (1.0 - qb);
  return 1.0 / expected;
}

std::optional<HeraldRecord> generate_entanglement(const AttemptSchedule& schedule,
                                                  const BellNoise& bell,
                                                  QubitId qa, QubitId qb, Rng& rng) {
  schedule.validate();
  const std::int64_t attempts = rng.geometric_attempts(schedule.success_prob);
  if (schedule.attempt_cap > 0 && attempts > schedule.attempt_cap) return std::nullopt;
  HeraldRecord rec;
  rec.attempts = attempts;
  rec.elapsed = schedule.elapsed_for(attempts);
  rec.state = noisy_bell_state(bell, qa, qb);
  return rec;
}

double expected_decay_factor(const AttemptSchedule& schedule, double gamma) {
  schedule.validate();
  if (gamma < 0) throw ConfigError("decay rate must be >= 0");
  if (gamma == 0) return 1.0;
  const double p = schedule.success_prob;
  const double q = 1.0 - p;
  const int b = schedule.attempts_per_block;
  const double fa = std::exp(-gamma * schedule.attempt_duration);
  const double within = q * fa;  // per-attempt survival-and-decay weight
  const double block = std::pow(q, b) *
                       std::exp(-gamma * (b * schedule.attempt_duration +
                                          schedule.recool_duration));
  const double geom_within = within == 1.0
                                 ? static_cast<double>(b)
                                 : (1.0 - std::pow(within, b)) / (1.0 - within);
  return p * fa * geom_within / (1.0 - block);
}

}  // namespace ionlink
