#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace ionsim {

//! Deterministic RNG with substream derivation from (seed, stream index).
//! The engine is mt19937_64 seeded through splitmix64; uniform and Poisson
//! draws are implemented here rather than via std distributions so the
//! byte-for-byte output is the same on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix(seed, stream)) {}

  static std::string generator_id() { return "mt19937_64/splitmix64 substreams"; }

  std::uint64_t next_u64() { return engine_(); }

  //! Uniform in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  //! Uniform sign, +1 or -1.
  int sign() { return (next_u64() & 1) ? 1 : -1; }

  bool bernoulli(double p) { return uniform() < p; }

  //! Poisson draw by inversion-by-multiplication; means above 64 are split
  //! into chunks so exp(-mean) never underflows.
  unsigned poisson(double mean);

private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over seed advanced by the stream index
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

} // namespace ionsim
