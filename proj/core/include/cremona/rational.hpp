#pragma once

#include <gmpxx.h>

#include <string>

#include "cremona/errors.hpp"

namespace cremona {

// Exact rational number. GMP does the arbitrary-precision work; values are
// always stored in lowest terms with the sign on the numerator.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long long v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit by design
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Rat fraction(long long num, long long den) {
    if (den == 0) throw StructuralError("Rat: zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Rat(q);
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }
  Rat from_int(long long v) const { return Rat(v); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  Rat inv() const {
    if (is_zero()) throw StructuralError("Rat::inv of zero");
    return Rat(mpq_class(1 / q_));
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

}  // namespace cremona
