#include "cremona/hilbert.hpp"

#include <algorithm>
#include <map>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

using Poly1 = std::vector<long long>;  // ascending coefficients in t

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly1 add(Poly1 a, const Poly1& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

// Drop generators divisible by another generator.
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i < a.arity(); ++i)
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
    return false;
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool divided = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        divided = true;
        break;
      }
    if (!divided) out.push_back(m);
  }
  gens = std::move(out);
}

std::vector<std::uint32_t> memo_key(const std::vector<Monomial>& gens, int arity) {
  std::vector<std::uint32_t> key;
  key.reserve(gens.size() * static_cast<std::size_t>(arity));
  for (const auto& m : gens)
    for (int i = 0; i < arity; ++i) key.push_back(m.exp(i));
  return key;
}

// Numerator N with HS(R/I) = N(t) / (1-t)^arity, by pivot splitting:
// N(I) = N(I + (x_v)) + t * N(I : x_v).
Poly1 numerator(std::vector<Monomial> gens, int arity,
                std::map<std::vector<std::uint32_t>, Poly1>& memo) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};

  auto key = memo_key(gens, arity);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // Pure powers of distinct variables: N = prod (1 - t^deg).
  bool all_pure = true;
  for (const auto& m : gens) {
    int support = 0;
    for (int i = 0; i < arity; ++i)
      if (m.exp(i)) ++support;
    if (support > 1) {
      all_pure = false;
      break;
    }
  }
  Poly1 result;
  if (all_pure) {
    result = {1};
    for (const auto& m : gens) {
      Poly1 f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      result = mul(result, f);
    }
  } else {
    // Pivot on the variable with the most occurrences among mixed generators.
    int best_var = -1, best_count = -1;
    for (int v = 0; v < arity; ++v) {
      int count = 0;
      bool in_mixed = false;
      for (const auto& m : gens) {
        if (m.exp(v)) {
          ++count;
          int support = 0;
          for (int i = 0; i < arity; ++i)
            if (m.exp(i)) ++support;
          if (support > 1) in_mixed = true;
        }
      }
      if (in_mixed && count > best_count) {
        best_count = count;
        best_var = v;
      }
    }
    std::vector<Monomial> plus;  // I + (x_v)
    plus.push_back(Monomial::var(arity, best_var));
    for (const auto& m : gens)
      if (m.exp(best_var) == 0) plus.push_back(m);
    std::vector<Monomial> colon;  // I : x_v
    for (const auto& m : gens) {
      Monomial c = m;
      if (c.exp(best_var)) c.set_exp(best_var, static_cast<std::uint16_t>(c.exp(best_var) - 1));
      colon.push_back(c);
    }
    Poly1 shifted = numerator(std::move(colon), arity, memo);
    shifted.insert(shifted.begin(), 0);  // * t
    trim(shifted);
    result = add(numerator(std::move(plus), arity, memo), shifted);
  }
  memo.emplace(std::move(key), result);
  return result;
}

long long eval_at_one(const Poly1& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

// Exact division by (1 - t); caller guarantees p(1) == 0.
Poly1 divide_by_one_minus_t(const Poly1& p) {
  // q_i = p_i + q_{i-1}; the final prefix sum must vanish.
  Poly1 q;
  long long carry = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    carry += p[i];
    q.push_back(carry);
  }
  trim(q);
  return q;
}

}  // namespace

HilbertData hilbert_from_lead_monomials(int arity, std::vector<Monomial> lead) {
  std::map<std::vector<std::uint32_t>, Poly1> memo;
  Poly1 n = numerator(std::move(lead), arity, memo);
  trim(n);

  HilbertData hd;
  if (n.empty()) {  // unit ideal: the quotient is zero
    hd.krull_dim = 0;
    hd.proj_dim = -1;
    hd.degree = 0;
    return hd;
  }
  hd.hf_equals_poly_from =
      std::max<long long>(0, static_cast<long long>(n.size()) - 1 - arity + 1);

  Poly1 q = n;
  int strips = 0;
  while (!q.empty() && eval_at_one(q) == 0) {
    q = divide_by_one_minus_t(q);
    ++strips;
  }
  hd.numerator = q;
  hd.krull_dim = arity - strips;
  hd.proj_dim = hd.krull_dim - 1;
  if (hd.krull_dim <= 0) {
    // The quotient is a finite-length cone supported at the origin: the
    // projective scheme is empty.
    hd.krull_dim = std::max(hd.krull_dim, 0);
    hd.proj_dim = -1;
    hd.degree = 0;
    return hd;
  }
  hd.degree = eval_at_one(q);

  // P(x) = sum_j Q_j * C(x - j + D - 1, D - 1), expanded over the rationals.
  const int D = hd.krull_dim;
  std::vector<Rat> poly;  // ascending
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    std::vector<Rat> f{Rat(1)};
    for (int i = 0; i < D - 1; ++i) {
      // multiply by (x + (D - 1 - j - i))
      long long c = D - 1 - static_cast<long long>(j) - i;
      std::vector<Rat> g(f.size() + 1, Rat(0));
      for (std::size_t k = 0; k < f.size(); ++k) {
        g[k + 1] += f[k];
        g[k] += f[k] * Rat(c);
      }
      f = std::move(g);
    }
    Rat fact(1);
    for (int i = 2; i <= D - 1; ++i) fact *= Rat(i);
    Rat scale = Rat(q[j]) * fact.inv();
    if (poly.size() < f.size()) poly.resize(f.size(), Rat(0));
    for (std::size_t k = 0; k < f.size(); ++k) poly[k] += f[k] * scale;
  }
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  hd.hilbert_poly = std::move(poly);
  return hd;
}

}  // namespace cremona
