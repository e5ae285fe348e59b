#pragma once

#include <cstdint>
#include <random>

#include "qchaos/types.hpp"

namespace qchaos {

std::uint64_t splitmix64(std::uint64_t& state);

// Seeded generator. Distinct (seed, stream) pairs give independent streams,
// so sample k of an ensemble can be drawn without touching samples 0..k-1.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double uniform();
  double normal();
  // standard complex normal, variance 1 per real component
  cplx cnormal();
  std::uint64_t below(std::uint64_t n);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 eng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

inline Rng substream(std::uint64_t seed, std::uint64_t index) { return Rng(seed, index + 1); }

}  // namespace qchaos
