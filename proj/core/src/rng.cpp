#include "qchaos/rng.hpp"

#include <array>

namespace qchaos {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (stream + 0x632be59bd9b4e019ULL));
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < words.size(); i += 2) {
    std::uint64_t v = splitmix64(s);
    words[i] = static_cast<std::uint32_t>(v);
    words[i + 1] = static_cast<std::uint32_t>(v >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), eng_(make_engine(seed, stream)) {}

double Rng::uniform() { return unif_(eng_); }

double Rng::normal() { return gauss_(eng_); }

cplx Rng::cnormal() {
  double re = gauss_(eng_);
  double im = gauss_(eng_);
  return {re, im};
}

std::uint64_t Rng::below(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
}

}  // namespace qchaos
