#pragma once

#include <cstdint>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Element of a prime field F_p. The modulus travels with the value so that
// mixed-modulus arithmetic is caught instead of silently wrapping. A
// default-constructed element is the modulus-agnostic zero: it combines with
// any modulus and compares equal to every zero.
class Fp {
 public:
  Fp() = default;

  static Fp make(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1 % (p_ ? p_ : 2), p_); }
  Fp from_int(long long v) const { return make(v, p_); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = resolve(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    if (s >= p) s -= p;
    return Fp(static_cast<std::uint32_t>(s), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t p = resolve(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + p - b.v_;
    if (s >= p) s -= p;
    return Fp(static_cast<std::uint32_t>(s), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = resolve(a, b);
    return Fp(static_cast<std::uint32_t>(
                  (static_cast<std::uint64_t>(a.v_) * b.v_) % p),
              p);
  }
  Fp operator-() const {
    if (v_ == 0) return *this;
    return Fp(p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const {
    if (v_ == 0) throw StructuralError("Fp::inv of zero");
    // Extended Euclid on (v, p).
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return make(x0, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.v_ == b.v_ && resolve(a, b) != 0;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  // Symmetric representative in (-p/2, p/2]; keeps printed fixtures short.
  long long symmetric() const {
    if (p_ == 0) return 0;
    if (v_ > p_ / 2) return static_cast<long long>(v_) - p_;
    return v_;
  }
  std::string to_string() const { return std::to_string(symmetric()); }

 private:
  Fp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}

  static std::uint32_t resolve(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw StructuralError("Fp modulus mismatch: " + std::to_string(a.p_) +
                          " vs " + std::to_string(b.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace cremona
