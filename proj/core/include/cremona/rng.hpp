#pragma once

#include <cstdint>
#include <random>

namespace cremona {

// Deterministic pseudo-random stream. Every "general position" choice in the
// library is drawn from one of these, so any reported number is reproducible
// from (modulus, seed). mt19937_64 has a fixed standard-mandated sequence.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : eng_(mix(seed)) {}
  SeedStream(std::uint64_t seed, std::uint64_t tag)
      : eng_(mix(seed ^ (0x9e3779b97f4a7c15ULL + (tag << 17) + (tag >> 3)))) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer; decorrelates nearby seeds.
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace cremona
