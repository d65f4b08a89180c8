#include "cremona/monomial.hpp"

namespace cremona {

namespace {

// Graded reverse lexicographic comparison restricted to variables [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  unsigned da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp(i);
    db += b.exp(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  const int n = a.arity();
  switch (kind) {
    case Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (int i = n - 1; i >= 0; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
      }
      return 0;
    }
    case Kind::lex: {
      for (int i = 0; i < n; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      }
      return 0;
    }
    case Kind::block: {
      int r = grevlex_range(a, b, 0, split);
      if (r != 0) return r;
      return grevlex_range(a, b, split, n);
    }
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree_unsorted(int arity, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(arity);
  // Lexicographic enumeration of exponent vectors summing to `degree`.
  auto rec = [&](auto&& self, int var, unsigned remaining) -> void {
    if (var == arity - 1) {
      m.set_exp(var, static_cast<std::uint16_t>(remaining));
      out.push_back(m);
      m.set_exp(var, 0);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.set_exp(var, static_cast<std::uint16_t>(e));
      self(self, var + 1, remaining - e);
    }
    m.set_exp(var, 0);
  };
  if (arity == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block" + std::to_string(split);
  }
  return "?";
}

}  // namespace cremona
