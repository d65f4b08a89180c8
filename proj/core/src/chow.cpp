#include "cremona/chow.hpp"

#include <vector>

namespace cremona {

ChowClass ChowClass::unit() {
  ChowClass x;
  x.set_coeff(0, 0, 0, 1);
  return x;
}
ChowClass ChowClass::s() {
  ChowClass x;
  x.set_coeff(1, 0, 0, 1);
  return x;
}
ChowClass ChowClass::h() {
  ChowClass x;
  x.set_coeff(0, 1, 0, 1);
  return x;
}
ChowClass ChowClass::hprime() {
  ChowClass x;
  x.set_coeff(0, 0, 1, 1);
  return x;
}

ChowClass operator+(const ChowClass& x, const ChowClass& y) {
  ChowClass r;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) r.set_coeff(a, b, c, x.coeff(a, b, c) + y.coeff(a, b, c));
  return r;
}

ChowClass operator-(const ChowClass& x, const ChowClass& y) {
  ChowClass r;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) r.set_coeff(a, b, c, x.coeff(a, b, c) - y.coeff(a, b, c));
  return r;
}

ChowClass operator*(const ChowClass& x, const ChowClass& y) {
  ChowClass r;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        long long v = x.coeff(a, b, c);
        if (v == 0) continue;
        for (int a2 = 0; a2 + a <= 1; ++a2)
          for (int b2 = 0; b2 + b <= 3; ++b2)
            for (int c2 = 0; c2 + c <= 3; ++c2) {
              long long w = y.coeff(a2, b2, c2);
              if (w == 0) continue;
              r.set_coeff(a + a2, b + b2, c + c2,
                          r.coeff(a + a2, b + b2, c + c2) + v * w);
            }
      }
  return r;
}

ChowClass ChowClass::scaled(long long k) const {
  ChowClass r;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) r.set_coeff(a, b, c, coeff(a, b, c) * k);
  return r;
}

ChowClass ChowClass::swap_h_hprime() const {
  ChowClass r;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) r.set_coeff(a, c, b, coeff(a, b, c));
  return r;
}

std::string ChowClass::to_string() const {
  std::string out;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        long long v = coeff(a, b, c);
        if (v == 0) continue;
        std::string mono;
        if (a) mono = "s";
        if (b) {
          if (!mono.empty()) mono += "*";
          mono += b > 1 ? "H^" + std::to_string(b) : "H";
        }
        if (c) {
          if (!mono.empty()) mono += "*";
          mono += c > 1 ? "H'^" + std::to_string(c) : "H'";
        }
        std::string piece;
        if (mono.empty())
          piece = std::to_string(v);
        else if (v == 1)
          piece = mono;
        else if (v == -1)
          piece = "-" + mono;
        else
          piece = std::to_string(v) + "*" + mono;
        if (!out.empty() && piece[0] != '-') out += "+";
        out += piece;
      }
  return out.empty() ? "0" : out;
}

ChowClass x_class() {
  ChowClass s = ChowClass::s(), h = ChowClass::h(), hp = ChowClass::hprime();
  return (s + h) * (s + hp) * (h + hp) * (s + h + hp);
}

ChowClass resolution_series_coeff(int k) {
  if (k < 0 || k > 2) throw StructuralError("series coefficient supported for k in 0..2");
  ChowClass s = ChowClass::s(), h = ChowClass::h();
  ChowClass roots[3] = {s, h, s + h};
  // Coefficient extraction of prod 1/(1 - u_i t) truncated at t^2.
  std::vector<ChowClass> series{ChowClass::unit()};
  series.resize(3);
  series[1] = ChowClass();
  series[2] = ChowClass();
  for (const auto& u : roots) {
    std::vector<ChowClass> factor{ChowClass::unit(), u, u * u};
    std::vector<ChowClass> next(3);
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) next[static_cast<std::size_t>(i + j)] =
          next[static_cast<std::size_t>(i + j)] + series[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
    series = std::move(next);
  }
  return series[static_cast<std::size_t>(k)];
}

ChowClass gamma_class() { return resolution_series_coeff(2); }

long long blowup_degree(const ChowClass& zero_cycle) {
  ChowClass v = zero_cycle * (ChowClass::s() + ChowClass::h());
  return v.coeff(1, 3, 0);
}

long long gamma_pair_h() { return blowup_degree(gamma_class() * ChowClass::h()); }
long long gamma_pair_s() { return blowup_degree(gamma_class() * ChowClass::s()); }

namespace {

// Classes in Z[s,H,H'] / (s^2, H^4) with unbounded H' exponent: coefficient
// grid [2][4][cmax+1].
struct BundleClass {
  int cmax;
  std::vector<long long> c;
  explicit BundleClass(int cm) : cmax(cm), c(static_cast<std::size_t>(2 * 4 * (cm + 1)), 0) {}
  long long& at(int a, int b, int k) {
    return c[static_cast<std::size_t>((a * 4 + b) * (cmax + 1) + k)];
  }
  long long get(int a, int b, int k) const {
    return c[static_cast<std::size_t>((a * 4 + b) * (cmax + 1) + k)];
  }
};

BundleClass bundle_mul(const BundleClass& x, const BundleClass& y) {
  BundleClass r(x.cmax);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int k = 0; k <= x.cmax; ++k) {
        long long v = x.get(a, b, k);
        if (!v) continue;
        for (int a2 = 0; a2 + a <= 1; ++a2)
          for (int b2 = 0; b2 + b <= 3; ++b2)
            for (int k2 = 0; k2 + k <= x.cmax; ++k2) {
              long long w = y.get(a2, b2, k2);
              if (!w) continue;
              r.at(a + a2, b + b2, k + k2) += v * w;
            }
      }
  return r;
}

}  // namespace

long long ruled_degree(int d) {
  if (d < 2) throw StructuralError("ruled_degree requires d >= 2");
  const int cmax = d + 3;
  BundleClass s(cmax), hp(cmax), h(cmax);
  s.at(1, 0, 0) = 1;
  hp.at(0, 0, 1) = 1;
  h.at(0, 1, 0) = 1;

  BundleClass acc(cmax);
  acc.at(0, 0, 0) = 1;
  BundleClass hps(cmax);
  hps.at(1, 0, 0) = 1;
  hps.at(0, 0, 1) = 1;
  for (int i = 0; i < d - 1; ++i) acc = bundle_mul(acc, hps);
  for (int i = 0; i < 3; ++i) acc = bundle_mul(acc, hp);
  // Push H'^k down with the rewrite H'^d -> H'^(d-1) * H until every
  // exponent is below d; the rule is confluent (highest power first).
  for (int k = cmax; k >= d; --k)
    for (int a = 0; a <= 1; ++a)
      for (int b = 3; b >= 0; --b) {
        long long v = acc.get(a, b, k);
        if (!v) continue;
        acc.at(a, b, k) = 0;
        if (b + 1 <= 3) acc.at(a, b + 1, k - 1) += v;
      }
  // Degree on the bundle base through the (1,1)-divisor embedding.
  BundleClass sh(cmax);
  sh.at(1, 0, 0) = 1;
  sh.at(0, 1, 0) = 1;
  acc = bundle_mul(acc, sh);
  return acc.get(1, 3, d - 1);
}

}  // namespace cremona
