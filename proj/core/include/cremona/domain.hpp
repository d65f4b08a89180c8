#pragma once

#include <cstdint>
#include <string>

#include "cremona/errors.hpp"
#include "cremona/fp.hpp"
#include "cremona/rational.hpp"
#include "cremona/rng.hpp"

namespace cremona {

// Coefficient domain descriptor. Two instantiations exist: the prime field
// F_p (p prime, p > 3, p < 2^31 so products fit in 64 bits) and the
// rationals. All arithmetic is exact in both.
template <class K>
struct Domain;

template <>
struct Domain<Fp> {
  explicit Domain(std::uint32_t prime) : p(prime) {
    if (p <= 3) throw StructuralError("prime field modulus must exceed 3");
    if (p >= (1u << 31)) throw StructuralError("prime field modulus must fit in 31 bits");
    if (!is_prime_u64(p)) throw StructuralError(std::to_string(p) + " is not prime");
  }

  Fp zero() const { return Fp::make(0, p); }
  Fp one() const { return Fp::make(1, p); }
  Fp from_int(long long v) const { return Fp::make(v, p); }
  Fp sample(SeedStream& s) const { return Fp::make(static_cast<long long>(s.below(p)), p); }
  Fp sample_nonzero(SeedStream& s) const {
    return Fp::make(1 + static_cast<long long>(s.below(p - 1)), p);
  }

  std::string describe() const { return "prime " + std::to_string(p); }

  std::uint32_t p;
};

template <>
struct Domain<Rat> {
  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long v) const { return Rat(v); }
  // Small integers: "general" rational data in this library is only used for
  // constructions whose coefficients are meant to stay tiny.
  Rat sample(SeedStream& s) const { return Rat(static_cast<long long>(s.below(19)) - 9); }
  Rat sample_nonzero(SeedStream& s) const {
    long long v = static_cast<long long>(s.below(18)) - 9;
    return Rat(v >= 0 ? v + 1 : v);
  }

  std::string describe() const { return "rationals"; }
};

}  // namespace cremona
