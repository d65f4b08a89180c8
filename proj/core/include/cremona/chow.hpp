#pragma once

#include <array>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {

// Integer class in Z[s,H,H']/(s^2, H^4, H'^4), the intersection ring of
// P1 x P3 x P'3. Dense 2x4x4 coefficient block; products truncate.
class ChowClass {
 public:
  ChowClass() { c_.fill(0); }

  static ChowClass unit();
  static ChowClass s();
  static ChowClass h();
  static ChowClass hprime();

  long long coeff(int a, int b, int c) const { return c_[idx(a, b, c)]; }
  void set_coeff(int a, int b, int c, long long v) { c_[idx(a, b, c)] = v; }

  // Coefficient of the top class s*H^3*H'^3.
  long long top() const { return coeff(1, 3, 3); }

  friend ChowClass operator+(const ChowClass& x, const ChowClass& y);
  friend ChowClass operator-(const ChowClass& x, const ChowClass& y);
  friend ChowClass operator*(const ChowClass& x, const ChowClass& y);
  ChowClass scaled(long long k) const;
  friend bool operator==(const ChowClass& x, const ChowClass& y) { return x.c_ == y.c_; }
  friend bool operator!=(const ChowClass& x, const ChowClass& y) { return !(x == y); }

  // The ring involution exchanging H and H' and fixing s.
  ChowClass swap_h_hprime() const;

  std::string to_string() const;

 private:
  static std::size_t idx(int a, int b, int c) {
    if (a < 0 || a > 1 || b < 0 || b > 3 || c < 0 || c > 3)
      throw StructuralError("chow index out of range");
    return static_cast<std::size_t>(a * 16 + b * 4 + c);
  }
  std::array<long long, 32> c_;
};

// (s+H)(s+H')(H+H')(s+H+H'): the class of the complete intersection threefold.
ChowClass x_class();

// Coefficient of t^k, k <= 2, in 1/((1-s t)(1-H t)(1-(s+H) t)), expanded in
// the truncated ring. k = 2 is the class of the resolved curve.
ChowClass resolution_series_coeff(int k);
ChowClass gamma_class();  // = resolution_series_coeff(2), expected 5sH + 3H^2

// Degree of a 0-cycle class on the blown-up threefold, computed through its
// embedding as the (1,1)-divisor of P1 x P3: coefficient of s*H^3 in c*(s+H).
long long blowup_degree(const ChowClass& zero_cycle);

// degree of Gamma . H and Gamma . s pairings
long long gamma_pair_h();
long long gamma_pair_s();

// (H'+s)^(d-1) * H'^3 in Z[s,H,H'] / (s^2, H^4) with the bundle relation
// H'^d = H'^(d-1) * H, pushed down to a number; equals d for every d >= 2.
long long ruled_degree(int d);

}  // namespace cremona
