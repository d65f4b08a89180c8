#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

// Exponent vector with cached total degree and support mask. Arity is capped
// at kMaxVars, which covers the largest ring in use (aux + source + target).
class Monomial {
 public:
  static constexpr int kMaxVars = 12;

  Monomial() { e_.fill(0); }
  explicit Monomial(int arity) : n_(check_arity(arity)) { e_.fill(0); }

  static Monomial one(int arity) { return Monomial(arity); }
  static Monomial var(int arity, int i, unsigned e = 1) {
    Monomial m(arity);
    m.set_exp(i, static_cast<std::uint16_t>(e));
    return m;
  }

  int arity() const { return n_; }
  unsigned degree() const { return deg_; }
  std::uint16_t exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  bool is_one() const { return deg_ == 0; }

  void set_exp(int i, std::uint16_t e) {
    auto idx = static_cast<std::size_t>(i);
    deg_ += e;
    deg_ -= e_[idx];
    e_[idx] = e;
    if (e)
      mask_ |= static_cast<std::uint16_t>(1u << i);
    else
      mask_ &= static_cast<std::uint16_t>(~(1u << i));
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) r.e_[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)]);
    r.deg_ = deg_ + o.deg_;
    r.mask_ = mask_ | o.mask_;
    return r;
  }

  // this | m
  bool divides(const Monomial& m) const {
    if (mask_ & ~m.mask_) return false;
    if (deg_ > m.deg_) return false;
    for (int i = 0; i < n_; ++i)
      if (e_[static_cast<std::size_t>(i)] > m.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // this / m; caller guarantees divisibility.
  Monomial div(const Monomial& m) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i)
      r.set_exp(i, static_cast<std::uint16_t>(e_[static_cast<std::size_t>(i)] -
                                              m.e_[static_cast<std::size_t>(i)]));
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      auto idx = static_cast<std::size_t>(i);
      r.set_exp(i, a.e_[idx] > b.e_[idx] ? a.e_[idx] : b.e_[idx]);
    }
    return r;
  }

  bool coprime_with(const Monomial& o) const { return (mask_ & o.mask_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < n_; ++i) {
      h ^= e_[static_cast<std::size_t>(i)];
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  static int check_arity(int arity) {
    if (arity < 0 || arity > kMaxVars) throw StructuralError("monomial arity out of range");
    return arity;
  }

  std::array<std::uint16_t, kMaxVars> e_;
  std::uint32_t deg_ = 0;
  std::uint16_t mask_ = 0;
  std::uint8_t n_ = 0;
};

// All monomials of one total degree in the given arity.
std::vector<Monomial> monomials_of_degree_unsorted(int arity, unsigned degree);

// Total multiplicative order with 1 minimal. Three kinds are enough here:
// grevlex for everything, lex for a cross-check, and a two-block order (each
// block compared by grevlex) for elimination of a variable prefix.
struct MonomialOrder {
  enum class Kind : std::uint8_t { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  int split = 0;  // block only: variables [0, split) are eliminated first

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(int split) { return {Kind::block, split}; }

  // +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::block || a.split == b.split);
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

  std::string name() const;
};

}  // namespace cremona
