#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/monomial.hpp"
#include "cremona/ring.hpp"

namespace cremona {

template <class K>
struct Term {
  Monomial mono;
  K coeff;
};

// Exact multivariate polynomial: terms with nonzero coefficients, strictly
// descending in the active monomial order. Values are immutable after
// construction as far as callers are concerned; all operations return new
// polynomials.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;

  Polynomial(Ring ring, std::vector<Term<K>> terms, MonomialOrder order = {})
      : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.mono.arity() != ring_.arity())
        throw StructuralError("term arity does not match ring");
    normalize();
  }

  static Polynomial zero(const Ring& ring, MonomialOrder order = {}) {
    Polynomial p;
    p.ring_ = ring;
    p.order_ = order;
    return p;
  }
  static Polynomial constant(const Ring& ring, const K& c, MonomialOrder order = {}) {
    if (c.is_zero()) return zero(ring, order);
    return Polynomial(ring, {{Monomial::one(ring.arity()), c}}, order);
  }
  static Polynomial variable(const Ring& ring, int i, const K& one, MonomialOrder order = {}) {
    return Polynomial(ring, {{Monomial::var(ring.arity(), i), one}}, order);
  }
  static Polynomial term(const Ring& ring, const K& c, const Monomial& m,
                         MonomialOrder order = {}) {
    if (c.is_zero()) return zero(ring, order);
    return Polynomial(ring, {{m, c}}, order);
  }

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term<K>& lead() const {
    if (terms_.empty()) throw StructuralError("lead term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_mono() const { return lead().mono; }
  const K& lead_coeff() const { return lead().coeff; }

  Polynomial drop_lead() const {
    Polynomial p = zero(ring_, order_);
    p.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
    p.recompute_homdeg();
    return p;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || homdeg_.has_value(); }
  std::optional<unsigned> homogeneous_degree() const { return homdeg_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial p(*this);
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }
  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& bIn) {
    a.check_same_ring(bIn);
    if (a.is_zero()) return a;
    if (bIn.is_zero()) return bIn.with_order(a.order_);
    const Polynomial b = bIn.order_ == a.order_ ? bIn : bIn.with_order(a.order_);
    std::vector<Term<K>> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Polynomial(a.ring_, std::move(out), a.order_);
  }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return zero(ring_, order_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    return p;
  }

  // c * m * this
  Polynomial mono_mul(const K& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_, order_);
    Polynomial p(*this);
    for (auto& t : p.terms_) {
      t.mono = t.mono * m;
      t.coeff = t.coeff * c;
    }
    if (p.homdeg_) p.homdeg_ = *p.homdeg_ + m.degree();
    return p;  // order preserved: multiplicative orders keep relative positions
  }

  // *this -= c * m * g, single merge pass. Used heavily by reduction.
  void sub_scaled_shifted(const K& c, const Monomial& m, const Polynomial& g) {
    check_same_ring(g);
    std::vector<Term<K>> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j >= g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      if (i >= terms_.size()) {
        K coeff = -(c * g.terms_[j].coeff);
        if (!coeff.is_zero()) out.push_back({gm, coeff});
        ++j;
        continue;
      }
      int r = order_.cmp(terms_[i].mono, gm);
      if (r > 0) {
        out.push_back(terms_[i++]);
      } else if (r < 0) {
        K coeff = -(c * g.terms_[j].coeff);
        if (!coeff.is_zero()) out.push_back({gm, coeff});
        ++j;
      } else {
        K coeff = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!coeff.is_zero()) out.push_back({gm, coeff});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    recompute_homdeg();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_) return false;
    const Polynomial* pb = &b;
    Polynomial tmp;
    if (a.order_ != b.order_) {
      tmp = b.with_order(a.order_);
      pb = &tmp;
    }
    if (a.terms_.size() != pb->terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != pb->terms_[i].mono || !(a.terms_[i].coeff == pb->terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != ring_.arity())
      throw StructuralError("evaluate: point arity mismatch");
    if (terms_.empty()) {
      // No domain information of our own; borrow it from the point.
      return point.empty() ? K() : point[0].zero();
    }
    K acc = terms_[0].coeff.zero();
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (int i = 0; i < ring_.arity(); ++i)
        for (unsigned e = 0; e < t.mono.exp(i); ++e) v = v * point[static_cast<std::size_t>(i)];
      acc = acc + v;
    }
    return acc;
  }

  void check_same_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw StructuralError("polynomial ring mismatch");
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& bIn, bool subtract) {
    a.check_same_ring(bIn);
    const Polynomial b = bIn.order_ == a.order_ ? bIn : bIn.with_order(a.order_);
    Polynomial p = zero(a.ring_, a.order_);
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (i >= a.terms_.size()) {
        Term<K> t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        p.terms_.push_back(std::move(t));
      } else if (j >= b.terms_.size()) {
        p.terms_.push_back(a.terms_[i++]);
      } else {
        int r = a.order_.cmp(a.terms_[i].mono, b.terms_[j].mono);
        if (r > 0) {
          p.terms_.push_back(a.terms_[i++]);
        } else if (r < 0) {
          Term<K> t = b.terms_[j++];
          if (subtract) t.coeff = -t.coeff;
          p.terms_.push_back(std::move(t));
        } else {
          K c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                         : a.terms_[i].coeff + b.terms_[j].coeff;
          if (!c.is_zero()) p.terms_.push_back({a.terms_[i].mono, c});
          ++i;
          ++j;
        }
      }
    }
    p.recompute_homdeg();
    return p;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term<K>& x, const Term<K>& y) {
      return order_.cmp(x.mono, y.mono) > 0;
    });
  }

  void normalize() {
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
        if (out.back().coeff.is_zero()) out.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
    recompute_homdeg();
  }

  void recompute_homdeg() {
    homdeg_.reset();
    if (terms_.empty()) return;
    unsigned d = terms_[0].mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return;
    homdeg_ = d;
  }

  Ring ring_;
  MonomialOrder order_;
  std::vector<Term<K>> terms_;
  std::optional<unsigned> homdeg_;
};

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, int var) {
  if (var < 0 || var >= f.ring().arity())
    throw StructuralError("partial_derivative: variable index out of range");
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    unsigned e = t.mono.exp(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exp(var, static_cast<std::uint16_t>(e - 1));
    out.push_back({m, t.coeff * t.coeff.from_int(static_cast<long long>(e))});
  }
  return Polynomial<K>(f.ring(), std::move(out), f.order());
}

// f(images): one image per variable of f's ring; images share one ring.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, std::span<const Polynomial<K>> images) {
  const int n = f.ring().arity();
  if (static_cast<int>(images.size()) != n)
    throw StructuralError("substitute: need one image per variable");
  for (const auto& g : images) images[0].check_same_ring(g);
  const Ring& target = images.empty() ? f.ring() : images[0].ring();
  MonomialOrder ord = images.empty() ? f.order() : images[0].order();
  // Power cache per variable, built lazily up to the largest exponent used.
  std::vector<std::vector<Polynomial<K>>> pow(static_cast<std::size_t>(n));
  auto power = [&](int i, unsigned e) -> const Polynomial<K>& {
    auto& cache = pow[static_cast<std::size_t>(i)];
    if (cache.empty()) cache.push_back(Polynomial<K>::zero(target, ord));  // placeholder for e=0
    while (cache.size() <= e) {
      if (cache.size() == 1)
        cache.push_back(images[static_cast<std::size_t>(i)].with_order(ord));
      else
        cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
    }
    return cache[e];
  };
  Polynomial<K> acc = Polynomial<K>::zero(target, ord);
  for (const auto& t : f.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(target, t.coeff, ord);
    for (int i = 0; i < n; ++i) {
      unsigned e = t.mono.exp(i);
      if (e > 0) prod = prod * power(i, e);
    }
    acc = acc + prod;
  }
  return acc;
}

// Quotient q with num == q * den, by repeated cancellation of the leading
// term; returns nothing when den does not divide num exactly.
template <class K>
std::optional<Polynomial<K>> exact_divide(const Polynomial<K>& num, const Polynomial<K>& den) {
  num.check_same_ring(den);
  if (den.is_zero()) throw StructuralError("exact_divide: zero divisor");
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial<K> r = num.with_order(ord);
  Polynomial<K> d = den.with_order(ord);
  Polynomial<K> q = Polynomial<K>::zero(num.ring(), ord);
  const K lc_inv = d.lead_coeff().inv();
  while (!r.is_zero()) {
    if (!d.lead_mono().divides(r.lead_mono())) return std::nullopt;
    K c = r.lead_coeff() * lc_inv;
    Monomial m = r.lead_mono().div(d.lead_mono());
    q = q + Polynomial<K>::term(num.ring(), c, m, ord);
    r.sub_scaled_shifted(c, m, d);
  }
  return q;
}

}  // namespace cremona
