#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cremona/domain.hpp"
#include "cremona/hilbert.hpp"
#include "cremona/linalg.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Reduction budget for a single basis computation; keeps runaway inputs
// diagnosable instead of hanging.
inline std::atomic<std::size_t>& gb_reduction_budget() {
  static std::atomic<std::size_t> budget{200000};
  return budget;
}

// Canonical scaling of basis elements: monic over F_p, primitive integer
// with positive leading coefficient over Q (keeps GMP numbers small).
inline Polynomial<Fp> scale_canonical(const Polynomial<Fp>& f) {
  if (f.is_zero() || f.lead_coeff().is_one()) return f;
  return f.scaled(f.lead_coeff().inv());
}

inline Polynomial<Rat> scale_canonical(const Polynomial<Rat>& f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_class n = t.coeff.numerator();
    if (n < 0) n = -n;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.coeff.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.lead_coeff().numerator() < 0) scale = -scale;
  return f.scaled(Rat(scale));
}

// Full normal form of f against a list of nonzero polynomials sorted in
// `order`; deterministic (first divisor wins), exact.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& fin, std::span<const Polynomial<K>> basis,
                          MonomialOrder order, std::size_t* steps = nullptr) {
  Polynomial<K> f = fin.with_order(order);
  std::vector<Term<K>> remainder;
  while (!f.is_zero()) {
    const Monomial& lm = f.lead_mono();
    const Polynomial<K>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.lead_mono().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      K c = f.lead_coeff() * divisor->lead_coeff().inv();
      f.sub_scaled_shifted(c, lm.div(divisor->lead_mono()), *divisor);
      if (steps) ++*steps;
    } else {
      remainder.push_back(f.lead());
      f = f.drop_lead();
    }
  }
  return Polynomial<K>(fin.ring(), std::move(remainder), order);
}

namespace gb {

template <class K>
struct PairEntry {
  Monomial lcm;
  int i, j;
};

struct PairLess {
  MonomialOrder order;
  template <class K>
  bool operator()(const PairEntry<K>& a, const PairEntry<K>& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int r = order.cmp(a.lcm, b.lcm);
    if (r != 0) return r < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

// Buchberger with the Gebauer-Moeller pair update and normal (lowest lcm
// degree first) selection.
template <class K>
std::vector<Polynomial<K>> buchberger(const Ring& ring, const std::vector<Polynomial<K>>& gens,
                                      MonomialOrder order, std::size_t budget) {
  using Pair = PairEntry<K>;
  std::vector<Polynomial<K>> G;
  std::set<Pair, PairLess> pairs(PairLess{order});

  auto add_element = [&](const Polynomial<K>& hIn) {
    const Polynomial<K> h = scale_canonical(hIn);
    const int t = static_cast<int>(G.size());
    const Monomial& lmh = h.lead_mono();
    // candidate new pairs, Gebauer-Moeller pruned
    std::vector<Pair> cand;
    for (int i = 0; i < t; ++i) cand.push_back({Monomial::lcm(G[static_cast<std::size_t>(i)].lead_mono(), lmh), i, t});
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (drop[b]) continue;
        if (cand[b].lcm == cand[a].lcm) {
          if (b > a) drop[b] = true;  // keep one representative per lcm class
        } else if (cand[b].lcm.divides(cand[a].lcm)) {
          drop[a] = true;
        }
      }
    }
    // prune old pairs dominated by the newcomer
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (lmh.divides(p.lcm) &&
          Monomial::lcm(G[static_cast<std::size_t>(p.i)].lead_mono(), lmh) != p.lcm &&
          Monomial::lcm(G[static_cast<std::size_t>(p.j)].lead_mono(), lmh) != p.lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      // product criterion: coprime lead monomials reduce to zero
      if (G[static_cast<std::size_t>(cand[a].i)].lead_mono().coprime_with(lmh)) continue;
      pairs.insert(cand[a]);
    }
    G.push_back(h);
  };

  for (const auto& g : gens) {
    if (!g.is_zero()) add_element(g.with_order(order));
  }

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Polynomial<K>& gi = G[static_cast<std::size_t>(p.i)];
    const Polynomial<K>& gj = G[static_cast<std::size_t>(p.j)];
    Polynomial<K> s = gi.mono_mul(gj.lead_coeff(), p.lcm.div(gi.lead_mono()));
    s.sub_scaled_shifted(gi.lead_coeff(), p.lcm.div(gj.lead_mono()), gj);
    if (++reductions > budget)
      throw BudgetExceeded("basis computation exceeded its reduction budget", reductions);
    Polynomial<K> r = normal_form(s, std::span<const Polynomial<K>>(G), order);
    if (!r.is_zero()) add_element(r);
  }

  // minimal basis: drop elements whose lead is divisible by another lead
  std::vector<Polynomial<K>> minimal;
  {
    std::vector<int> idx(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      int r = order.cmp(G[static_cast<std::size_t>(a)].lead_mono(),
                        G[static_cast<std::size_t>(b)].lead_mono());
      if (r != 0) return r < 0;
      return a < b;
    });
    for (int i : idx) {
      const Monomial& lm = G[static_cast<std::size_t>(i)].lead_mono();
      bool divided = false;
      for (const auto& kept : minimal)
        if (kept.lead_mono().divides(lm)) {
          divided = true;
          break;
        }
      if (!divided) minimal.push_back(G[static_cast<std::size_t>(i)]);
    }
  }
  // interreduce to the reduced basis
  for (int pass = 0; pass < 100; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<K>> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial<K> r = scale_canonical(
          normal_form(minimal[i], std::span<const Polynomial<K>>(others), order));
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return minimal;
}

}  // namespace gb

struct OrderKey {
  int kind;
  int split;
  friend bool operator<(const OrderKey& a, const OrderKey& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.split < b.split;
  }
};

// Ideal: a generator list plus a per-order cache of reduced bases. The
// generators are immutable; the cache is a single-writer multi-reader memo
// shared by all copies of the ideal.
template <class K>
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial<K>> gens) : d_(std::make_shared<Data>()) {
    d_->ring = std::move(ring);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!(g.ring() == d_->ring)) throw StructuralError("generator ring mismatch");
      d_->gens.push_back(std::move(g));
    }
  }

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring, const K& one) {
    return Ideal(ring, {Polynomial<K>::constant(ring, one)});
  }
  static Ideal irrelevant(const Ring& ring, const K& one) {
    std::vector<Polynomial<K>> v;
    for (int i = 0; i < ring.arity(); ++i) v.push_back(Polynomial<K>::variable(ring, i, one));
    return Ideal(ring, std::move(v));
  }

  const Ring& ring() const { return d_->ring; }
  const std::vector<Polynomial<K>>& gens() const { return d_->gens; }
  bool is_zero_ideal() const { return d_->gens.empty(); }
  bool has_constant_gen() const {
    for (const auto& g : d_->gens)
      if (g.is_constant()) return true;
    return false;
  }
  bool generators_homogeneous() const {
    for (const auto& g : d_->gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  const std::vector<Polynomial<K>>& groebner(MonomialOrder order = {}) const {
    OrderKey key{static_cast<int>(order.kind), order.split};
    std::lock_guard<std::mutex> lock(d_->mu);
    auto it = d_->bases.find(key);
    if (it == d_->bases.end()) {
      auto basis = std::make_shared<const std::vector<Polynomial<K>>>(
          gb::buchberger(d_->ring, d_->gens, order, gb_reduction_budget().load()));
      it = d_->bases.emplace(key, std::move(basis)).first;
    }
    return *it->second;
  }

  Polynomial<K> normal_form_of(const Polynomial<K>& f, MonomialOrder order = {}) const {
    const auto& basis = groebner(order);
    return normal_form(f, std::span<const Polynomial<K>>(basis), order);
  }

  bool contains(const Polynomial<K>& f) const {
    if (f.is_zero()) return true;
    if (is_zero_ideal()) return false;
    return normal_form_of(f).is_zero();
  }

  bool contains_ideal(const Ideal& other) const {
    for (const auto& g : other.gens())
      if (!contains(g)) return false;
    return true;
  }

  bool is_unit() const {
    if (has_constant_gen()) return true;
    if (is_zero_ideal()) return false;
    const auto& basis = groebner();
    return basis.size() == 1 && basis[0].is_constant();
  }

  bool equals(const Ideal& other) const {
    if (d_ == other.d_) return true;
    if (!(ring() == other.ring())) return false;
    const auto& a = groebner();
    const auto& b = other.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  const HilbertData& hilbert() const {
    std::lock_guard<std::mutex> lock(d_->hilb_mu);
    if (!d_->hilb) {
      if (!generators_homogeneous())
        throw StructuralError("hilbert requires homogeneous generators");
      const auto& basis = groebner();
      std::vector<Monomial> lead;
      lead.reserve(basis.size());
      for (const auto& g : basis) lead.push_back(g.lead_mono());
      d_->hilb = std::make_shared<const HilbertData>(
          hilbert_from_lead_monomials(d_->ring.arity(), std::move(lead)));
    }
    return *d_->hilb;
  }

 private:
  struct Data {
    Ring ring;
    std::vector<Polynomial<K>> gens;
    std::mutex mu;
    std::map<OrderKey, std::shared_ptr<const std::vector<Polynomial<K>>>> bases;
    std::mutex hilb_mu;
    std::shared_ptr<const HilbertData> hilb;
  };
  std::shared_ptr<Data> d_;
};

template <class K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I) {
  return I.contains(f);
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideal_sum: ring mismatch");
  std::vector<Polynomial<K>> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideal_product: ring mismatch");
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, int k) {
  if (k < 1) throw StructuralError("ideal_power requires a positive exponent");
  Ideal<K> acc = a;
  for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

// Same-arity ring swap by position (e.g. renaming y-coordinates to z); the
// exponent vectors are reused as they are.
template <class K>
Polynomial<K> reindex(const Polynomial<K>& f, const Ring& target) {
  if (target.arity() != f.ring().arity()) throw StructuralError("reindex: arity mismatch");
  std::vector<Term<K>> terms(f.terms().begin(), f.terms().end());
  return Polynomial<K>(target, std::move(terms), f.order());
}

template <class K>
Ideal<K> reindex(const Ideal<K>& I, const Ring& target) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(reindex(g, target));
  return Ideal<K>(target, std::move(gens));
}

// Move a polynomial into another ring, matching variables by name. Any
// variable absent from the target must have exponent zero.
template <class K>
Polynomial<K> transport(const Polynomial<K>& f, const Ring& target) {
  const Ring& from = f.ring();
  std::vector<int> map(static_cast<std::size_t>(from.arity()));
  for (int i = 0; i < from.arity(); ++i) map[static_cast<std::size_t>(i)] = target.index_of(from.var(i));
  std::vector<Term<K>> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(target.arity());
    for (int i = 0; i < from.arity(); ++i) {
      unsigned e = t.mono.exp(i);
      if (e == 0) continue;
      int j = map[static_cast<std::size_t>(i)];
      if (j < 0) throw StructuralError("transport: variable " + from.var(i) + " not in target ring");
      m.set_exp(j, static_cast<std::uint16_t>(e));
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<K>(target, std::move(terms));
}

// Split a polynomial into its homogeneous components; each component of an
// element of a homogeneous ideal stays in the ideal.
template <class K>
std::vector<Polynomial<K>> homogeneous_parts(const Polynomial<K>& f) {
  std::map<unsigned, std::vector<Term<K>>> buckets;
  for (const auto& t : f.terms()) buckets[t.mono.degree()].push_back(t);
  std::vector<Polynomial<K>> parts;
  for (auto& [deg, terms] : buckets) parts.push_back(Polynomial<K>(f.ring(), std::move(terms)));
  return parts;
}

// Generators of the elimination ideal I ∩ k[vars >= k], from a basis for the
// two-block order.
template <class K>
Ideal<K> eliminate_prefix(const Ideal<K>& I, int k) {
  const Ring& ring = I.ring();
  Ring target = ring.suffix(k);
  if (I.is_zero_ideal()) return Ideal<K>::zero(target);
  const auto& basis = I.groebner(MonomialOrder::block(k));
  std::vector<Polynomial<K>> kept;
  for (const auto& g : basis) {
    bool uses_prefix = false;
    for (const auto& t : g.terms())
      for (int i = 0; i < k && !uses_prefix; ++i)
        if (t.mono.exp(i)) uses_prefix = true;
    if (!uses_prefix) kept.push_back(transport(g.with_order(MonomialOrder::grevlex()), target));
  }
  return Ideal<K>(target, std::move(kept));
}

namespace detail {

inline std::string pick_aux_name(const Ring& ring) {
  for (const char* name : {"t", "u"}) {
    if (ring.index_of(name) < 0) return name;
  }
  throw StructuralError("no auxiliary variable name available");
}

}  // namespace detail

template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b) {
  if (!(a.ring() == b.ring())) throw StructuralError("ideal_intersection: ring mismatch");
  const Ring& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>::zero(ring);
  if (a.has_constant_gen()) return b;
  if (b.has_constant_gen()) return a;
  const bool homog = a.generators_homogeneous() && b.generators_homogeneous();

  Ring tring = ring.with_aux_front(detail::pick_aux_name(ring));
  const K one = a.gens().front().lead_coeff().one();
  Polynomial<K> t = Polynomial<K>::variable(tring, 0, one);
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.gens()) gens.push_back(t * transport(f, tring));
  for (const auto& g : b.gens()) {
    Polynomial<K> ge = transport(g, tring);
    gens.push_back(ge - t * ge);
  }
  Ideal<K> K1(tring, std::move(gens));
  Ideal<K> elim = eliminate_prefix(K1, 1);
  std::vector<Polynomial<K>> out;
  for (const auto& g : elim.gens()) {
    Polynomial<K> h = transport(g, ring);
    if (homog) {
      for (auto& part : homogeneous_parts(h)) out.push_back(std::move(part));
    } else {
      out.push_back(std::move(h));
    }
  }
  return Ideal<K>(ring, std::move(out));
}

// (I : g) for a single nonzero g, via I ∩ (g) followed by exact division.
template <class K>
Ideal<K> ideal_quotient_by_element(const Ideal<K>& I, const Polynomial<K>& g) {
  if (g.is_zero()) throw StructuralError("quotient by zero element");
  if (g.is_constant()) return I;
  if (I.is_zero_ideal()) return I;
  Ideal<K> inter = ideal_intersection(I, Ideal<K>(I.ring(), {g}));
  std::vector<Polynomial<K>> gens;
  for (const auto& h : inter.gens()) {
    auto q = exact_divide(h, g);
    if (!q) throw StructuralError("quotient: intersection element not divisible");
    if (!q->is_zero()) gens.push_back(std::move(*q));
  }
  return Ideal<K>(I.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& I, const Ideal<K>& J) {
  if (!(I.ring() == J.ring())) throw StructuralError("ideal_quotient: ring mismatch");
  if (J.is_zero_ideal()) {
    if (I.is_zero_ideal()) throw StructuralError("quotient (0 : 0) has no coefficient domain");
    return Ideal<K>::unit(I.ring(), I.gens().front().lead_coeff().one());
  }
  if (I.is_zero_ideal()) return I;
  std::optional<Ideal<K>> acc;
  for (const auto& g : J.gens()) {
    Ideal<K> q = ideal_quotient_by_element(I, g);
    acc = acc ? ideal_intersection(*acc, q) : q;
    if (acc->is_zero_ideal()) break;
  }
  return *acc;
}

// Stable value of iterated quotients (I : J^infinity). Returns the saturated
// ideal with its reduced basis as generator list.
template <class K>
Ideal<K> saturation(const Ideal<K>& I, const Ideal<K>& J) {
  Ideal<K> cur = I;
  for (int round = 0; round < 256; ++round) {
    Ideal<K> nxt = ideal_quotient(cur, J);
    if (nxt.equals(cur)) return Ideal<K>(cur.ring(), cur.groebner());
    cur = nxt;
  }
  throw StructuralError("saturation did not stabilize (impossible for noetherian input)");
}

struct MonoLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.cmp(a, b) < 0; }
};

// All monomials of the given total degree, descending in grevlex.
inline std::vector<Monomial> monomials_of_degree(int arity, unsigned degree) {
  std::vector<Monomial> out = monomials_of_degree_unsorted(arity, degree);
  MonomialOrder o = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&o](const Monomial& a, const Monomial& b) { return o.cmp(a, b) > 0; });
  return out;
}

// Canonical basis (reduced row echelon rows over the descending grevlex
// monomial basis) of the degree-d slice of the ideal spanned by `gens`.
template <class K>
std::vector<Polynomial<K>> graded_piece(const Ideal<K>& I, unsigned d) {
  const Ring& ring = I.ring();
  if (!I.generators_homogeneous())
    throw StructuralError("graded_piece requires homogeneous generators");
  std::vector<Monomial> cols = monomials_of_degree(ring.arity(), d);
  std::map<Monomial, int, MonoLess> col_of(MonoLess{MonomialOrder::grevlex()});
  for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = static_cast<int>(c);

  std::vector<Polynomial<K>> rows_polys;
  for (const auto& g : I.gens()) {
    unsigned dg = *g.homogeneous_degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(ring.arity(), d - dg))
      rows_polys.push_back(g.mono_mul(g.lead_coeff().one(), m));
  }
  if (rows_polys.empty()) return {};
  const K zero = rows_polys.front().lead_coeff().zero();
  DenseMatrix<K> mat(static_cast<int>(rows_polys.size()), static_cast<int>(cols.size()), zero);
  for (std::size_t r = 0; r < rows_polys.size(); ++r)
    for (const auto& t : rows_polys[r].terms())
      mat.at(static_cast<int>(r), col_of.at(t.mono)) = t.coeff;
  int rank = mat.rref_in_place();
  std::vector<Polynomial<K>> out;
  for (int r = 0; r < rank; ++r) {
    std::vector<Term<K>> terms;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!mat.at(r, static_cast<int>(c)).is_zero())
        terms.push_back({cols[c], mat.at(r, static_cast<int>(c))});
    out.push_back(Polynomial<K>(ring, std::move(terms)));
  }
  return out;
}

// f(M z): substitute each variable by the corresponding row of M applied to
// the variable vector.
template <class K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const DenseMatrix<K>& M) {
  const Ring& ring = f.ring();
  std::vector<Polynomial<K>> images;
  for (int i = 0; i < ring.arity(); ++i) {
    std::vector<Term<K>> terms;
    for (int j = 0; j < ring.arity(); ++j)
      if (!M.at(i, j).is_zero()) terms.push_back({Monomial::var(ring.arity(), j), M.at(i, j)});
    images.push_back(Polynomial<K>(ring, std::move(terms)));
  }
  return substitute(f, std::span<const Polynomial<K>>(images));
}

template <class K>
Ideal<K> apply_linear_change(const Ideal<K>& I, const DenseMatrix<K>& M) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(apply_linear_change(g, M));
  return Ideal<K>(I.ring(), std::move(gens));
}

namespace uni {

// Minimal univariate helpers over a field, ascending coefficients.
template <class K>
int degree(const std::vector<K>& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

template <class K>
std::vector<K> derivative(const std::vector<K>& p) {
  std::vector<K> d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * p[i].from_int(static_cast<long long>(i)));
  return d;
}

template <class K>
std::vector<K> remainder(std::vector<K> a, const std::vector<K>& b) {
  int db = degree(b);
  if (db < 0) throw StructuralError("univariate remainder by zero");
  K lead_inv = b[static_cast<std::size_t>(db)].inv();
  int da = degree(a);
  while (da >= db) {
    K c = a[static_cast<std::size_t>(da)] * lead_inv;
    for (int i = 0; i <= db; ++i) {
      auto ai = static_cast<std::size_t>(da - db + i);
      a[ai] = a[ai] - c * b[static_cast<std::size_t>(i)];
    }
    da = degree(a);
  }
  return a;
}

template <class K>
std::vector<K> gcd(std::vector<K> a, std::vector<K> b) {
  while (degree(b) >= 0) {
    std::vector<K> r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace uni

// Number of geometric points of a saturated zero-dimensional projective
// scheme. Projects to a line through three independent random coordinate
// changes and takes the largest squarefree eliminant degree seen: a collision
// of distinct points only ever lowers the count, and triples of bad draws are
// vanishingly rare over a large field.
template <class K>
long long count_distinct_points(const Ideal<K>& I, const Domain<K>& dom, SeedStream& rng) {
  const HilbertData& hd = I.hilbert();
  if (hd.proj_dim > 0) throw StructuralError("count_distinct_points: scheme has positive dimension");
  if (hd.proj_dim < 0) return 0;
  const int n = I.ring().arity();
  if (n < 2) throw StructuralError("count_distinct_points: need at least two variables");

  long long best = 0;
  int successes = 0, failures = 0;
  while (successes < 3) {
    if (failures >= 5) throw RetriesExhausted("generic projection to a line", failures);
    DenseMatrix<K> T = random_invertible(dom, rng, n);
    Ideal<K> moved = apply_linear_change(I, T);
    Ideal<K> elim = eliminate_prefix(moved, n - 2);
    // The image ideal of a finite scheme in two variables is principal once
    // saturated.
    Ideal<K> sat = saturation(elim, Ideal<K>::irrelevant(elim.ring(), dom.one()));
    const auto& basis = sat.groebner();
    if (basis.size() != 1) {
      ++failures;
      continue;
    }
    const Polynomial<K>& h = basis[0];
    if (!h.is_homogeneous()) {
      ++failures;
      continue;
    }
    int dh = static_cast<int>(h.total_degree());
    std::vector<K> F(static_cast<std::size_t>(dh) + 1, dom.zero());
    for (const auto& t : h.terms()) F[t.mono.exp(0)] = t.coeff;
    int df = uni::degree(F);
    long long count = 0;
    if (df < dh) count += 1;  // the point at (1:0)
    if (df > 0) {
      std::vector<K> g = uni::gcd(F, uni::derivative(F));
      count += df - uni::degree(g);
    }
    best = std::max(best, count);
    ++successes;
  }
  return best;
}

}  // namespace cremona
