#ifndef WITTFORGE_RNG_HPP
#define WITTFORGE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace wittforge {

// All randomness in the library flows through this wrapper. Bounded draws
// avoid std::uniform_int_distribution so that a given seed produces the same
// byte stream on every standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  bool coin() { return (engine_() & 1u) != 0; }

  // Derive an independent child generator; used to fan out seeded work
  // (fuzz batteries, per-game streams) without sharing state.
  Rng split(std::uint64_t label) {
    std::uint64_t s = engine_() ^ mix(label);
    return Rng(mix(s));
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wittforge

#endif
