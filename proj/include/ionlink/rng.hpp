#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace ionlink {

// Deterministic, implementation-pinned PRNG (splitmix64). We do not use
// std::mt19937/std::*_distribution because their output is not guaranteed
// identical across standard libraries, and run reproducibility is a
// contract of this project.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so that nearby seeds decorrelate.
    next();
    next();
  }

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller (no cached spare: two uniforms per draw,
  // so the stream position is a pure function of the draw count).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Number of Bernoulli(p) trials up to and including the first success.
  uint64_t geometric_attempts(double p) {
    if (p >= 1.0) return 1;
    double u = uniform();
    while (u <= 0.0) u = uniform();
    double a = std::floor(std::log(u) / std::log1p(-p));
    if (a < 0.0) a = 0.0;
    return 1 + static_cast<uint64_t>(a);
  }

  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

// FNV-1a, used to derive named sub-streams from a master seed.
constexpr uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Independent named stream: documented splitting scheme for parallel
// experiments ("alice", "bob", "link", "tomo/3", ...).
inline Rng derive_stream(uint64_t master_seed, std::string_view name) {
  return Rng(master_seed ^ fnv1a(name));
}

}  // namespace ionlink
