#pragma once

#include <array>
#include <optional>
#include <string>

#include "cremona/ideal.hpp"
#include "cremona/polymatrix.hpp"

namespace cremona {

// Rational map P3 -> P3 given by four homogeneous forms of one degree with
// base locus of codimension at least 2 (equivalently: no common factor; a
// common factor would force a codimension-1 base component, so the
// saturation certificate below doubles as the no-common-factor check).
template <class K>
class RationalMap {
 public:
  RationalMap(Ring ring, std::array<Polynomial<K>, 4> comps, Domain<K> dom,
              std::string provenance = "")
      : d_(std::make_shared<Data>(std::move(ring), std::move(comps), std::move(dom),
                                  std::move(provenance))) {
    if (d_->ring.arity() != 4) throw StructuralError("rational map needs a 4-variable ring");
    std::optional<unsigned> deg;
    bool any = false;
    for (const auto& c : d_->comps) {
      if (!(c.ring() == d_->ring)) throw StructuralError("component ring mismatch");
      if (c.is_zero()) continue;
      any = true;
      if (!c.is_homogeneous()) throw StructuralError("components must be homogeneous");
      if (deg && *deg != *c.homogeneous_degree())
        throw StructuralError("components must share one degree");
      deg = c.homogeneous_degree();
    }
    if (!any) throw StructuralError("all components are zero");
    if (*deg == 0) throw StructuralError("components must have positive degree");
    d_->degree = static_cast<int>(*deg);
    // Certificate: the saturated base ideal has projective dimension <= 1.
    const Ideal<K>& base = base_ideal();
    if (!base.is_unit() && base.hilbert().proj_dim > 1)
      throw DegenerateDraw("base locus has codimension < 2 (common factor)");
  }

  const Ring& ring() const { return d_->ring; }
  const std::array<Polynomial<K>, 4>& components() const { return d_->comps; }
  int degree() const { return d_->degree; }
  const Domain<K>& domain() const { return d_->dom; }
  const std::string& provenance() const { return d_->provenance; }

  static RationalMap identity(const Ring& ring, const Domain<K>& dom) {
    std::array<Polynomial<K>, 4> comps{
        Polynomial<K>::variable(ring, 0, dom.one()), Polynomial<K>::variable(ring, 1, dom.one()),
        Polynomial<K>::variable(ring, 2, dom.one()), Polynomial<K>::variable(ring, 3, dom.one())};
    return RationalMap(ring, std::move(comps), dom, "identity");
  }

  // Saturation of (phi_0..phi_3) by the irrelevant ideal; the homogeneous
  // ideal of the base scheme.
  const Ideal<K>& base_ideal() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (!d_->base) {
      Ideal<K> raw(d_->ring, {d_->comps[0], d_->comps[1], d_->comps[2], d_->comps[3]});
      d_->base = saturation(raw, Ideal<K>::irrelevant(d_->ring, d_->dom.one()));
    }
    return *d_->base;
  }

  // Scheme cut by all sixteen partials d(phi_i)/d(z_j), saturated.
  const Ideal<K>& sing_ideal() const {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (!d_->sing) {
      std::vector<Polynomial<K>> partials;
      for (const auto& c : d_->comps)
        for (int j = 0; j < 4; ++j) partials.push_back(partial_derivative(c, j));
      Ideal<K> raw(d_->ring, std::move(partials));
      d_->sing = saturation(raw, Ideal<K>::irrelevant(d_->ring, d_->dom.one()));
    }
    return *d_->sing;
  }

 private:
  struct Data {
    Data(Ring r, std::array<Polynomial<K>, 4> c, Domain<K> d, std::string p)
        : ring(std::move(r)), comps(std::move(c)), dom(std::move(d)), provenance(std::move(p)) {}
    Ring ring;
    std::array<Polynomial<K>, 4> comps;
    Domain<K> dom;
    std::string provenance;
    int degree = 0;
    std::optional<Ideal<K>> base;
    std::optional<Ideal<K>> sing;
    std::mutex mu;
  };
  std::shared_ptr<Data> d_;
};

template <class K>
struct SingSchemeResult {
  Ideal<K> ideal;
  int beta;                      // projective dimension; -1 when empty
  std::optional<long long> eta;  // degree, set when beta == 1
};

template <class K>
SingSchemeResult<K> sing_scheme(const RationalMap<K>& m) {
  const Ideal<K>& s = m.sing_ideal();
  if (s.is_unit()) return {s, -1, std::nullopt};
  const HilbertData& hd = s.hilbert();
  SingSchemeResult<K> r{s, hd.proj_dim, std::nullopt};
  if (hd.proj_dim == 1) r.eta = hd.degree;
  return r;
}

namespace detail {

// Pull back the intersection of `count` random target hyperplanes:
// generators l_k(phi_0..phi_3) for random linear forms l_k.
template <class K>
std::vector<Polynomial<K>> random_hyperplane_pullbacks(const RationalMap<K>& m, int count,
                                                       SeedStream& rng) {
  std::vector<Polynomial<K>> gens;
  for (int k = 0; k < count; ++k) {
    Polynomial<K> acc = Polynomial<K>::zero(m.ring());
    for (int i = 0; i < 4; ++i)
      acc = acc + m.components()[static_cast<std::size_t>(i)].scaled(m.domain().sample(rng));
    if (acc.is_zero()) throw DegenerateDraw("zero hyperplane pullback");
    gens.push_back(acc);
  }
  return gens;
}

template <class K>
Ideal<K> strip_base_and_irrelevant(const RationalMap<K>& m, std::vector<Polynomial<K>> gens) {
  Ideal<K> fiber(m.ring(), std::move(gens));
  Ideal<K> sat1 = saturation(fiber, Ideal<K>::irrelevant(m.ring(), m.domain().one()));
  return saturation(sat1, m.base_ideal());
}

}  // namespace detail

template <class K>
struct BirationalCertificate {
  bool birational;
  long long fiber_degree;  // Hilbert degree of the generic fiber
  int attempts;
};

// Generic-fiber test: pull back a random point and check that exactly one
// reduced point survives after stripping the base locus.
template <class K>
BirationalCertificate<K> is_birational(const RationalMap<K>& m, SeedStream& rng) {
  for (int attempt = 1; attempt <= 5; ++attempt) {
    try {
      Ideal<K> fiber = detail::strip_base_and_irrelevant(
          m, detail::random_hyperplane_pullbacks(m, 3, rng));
      if (fiber.is_unit()) throw DegenerateDraw("fiber vanished into the base locus");
      const HilbertData& hd = fiber.hilbert();
      if (hd.proj_dim != 0) throw DegenerateDraw("fiber has positive dimension");
      return {hd.degree == 1, hd.degree, attempt};
    } catch (const DegenerateDraw&) {
      if (attempt == 5) throw RetriesExhausted("is_birational inconclusive", attempt);
    }
  }
  throw RetriesExhausted("is_birational inconclusive", 5);
}

// Degree of the strict transform of a random target line = degree of the
// inverse map. Callers certify birationality first.
template <class K>
long long inverse_degree(const RationalMap<K>& m, SeedStream& rng) {
  for (int attempt = 1; attempt <= 5; ++attempt) {
    try {
      Ideal<K> curve = detail::strip_base_and_irrelevant(
          m, detail::random_hyperplane_pullbacks(m, 2, rng));
      if (curve.is_unit()) throw DegenerateDraw("line pullback vanished into the base locus");
      const HilbertData& hd = curve.hilbert();
      if (hd.proj_dim != 1) throw DegenerateDraw("line pullback is not a curve");
      return hd.degree;
    } catch (const DegenerateDraw&) {
      if (attempt == 5) throw RetriesExhausted("inverse_degree inconclusive", attempt);
    }
  }
  throw RetriesExhausted("inverse_degree inconclusive", 5);
}

// inv(m(z)) must be c * (z0,z1,z2,z3) for a single polynomial c; returns c.
template <class K>
Polynomial<K> compose_check(const RationalMap<K>& m, const RationalMap<K>& inv) {
  std::array<Polynomial<K>, 4> comp;
  std::span<const Polynomial<K>> images(m.components().data(), 4);
  for (int i = 0; i < 4; ++i)
    comp[static_cast<std::size_t>(i)] = substitute(inv.components()[static_cast<std::size_t>(i)], images);
  const Ring& ring = m.ring();
  auto factor = exact_divide(comp[0], Polynomial<K>::variable(ring, 0, m.domain().one()));
  if (!factor || factor->is_zero()) throw StructuralError("not an inverse");
  for (int i = 1; i < 4; ++i) {
    Polynomial<K> expect = factor->mono_mul(m.domain().one(), Monomial::var(4, i));
    if (expect != comp[static_cast<std::size_t>(i)]) throw StructuralError("not an inverse");
  }
  return *factor;
}

template <class K>
Polynomial<K> jacobian(const RationalMap<K>& m) {
  PolyMatrix<K> J(4, 4, Polynomial<K>::zero(m.ring()));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      J.at(i, j) = partial_derivative(m.components()[static_cast<std::size_t>(i)], j);
  return determinant(J);
}

// Length of the intersection scheme of a curve and a line (0 when disjoint).
template <class K>
long long secant_length(const Ideal<K>& curve, const Ideal<K>& line) {
  if (!(curve.ring() == line.ring())) throw StructuralError("secant_length: ring mismatch");
  if (curve.contains_ideal(line) || line.contains_ideal(curve))
    throw StructuralError("secant_length: containment between curve and line");
  const K one = curve.gens().front().lead_coeff().one();
  Ideal<K> meet = saturation(ideal_sum(curve, line), Ideal<K>::irrelevant(curve.ring(), one));
  if (meet.is_unit()) return 0;
  const HilbertData& hd = meet.hilbert();
  if (hd.proj_dim != 0) throw StructuralError("secant_length: intersection has positive dimension");
  return hd.degree;
}

template <class K>
struct ImageResult {
  Ideal<K> ideal;  // lives in the target ring (y0..y3)
  int proj_dim;
  long long degree;
};

// Scheme-theoretic image of the hypersurface S under m: saturated graph
// ideal (2x2 minors of the two rows (y), (phi), saturated by the base ideal)
// plus S, then eliminate the source variables and saturate. The heaviest
// operation in the library.
template <class K>
ImageResult<K> image_of_hypersurface(const RationalMap<K>& m, const Polynomial<K>& S) {
  if (!S.is_homogeneous() || S.is_zero())
    throw StructuralError("image_of_hypersurface: S must be a nonzero form");
  const Ring& graph_ring = Ring::graph();
  const Domain<K>& dom = m.domain();

  std::array<Polynomial<K>, 4> phi;
  for (int i = 0; i < 4; ++i)
    phi[static_cast<std::size_t>(i)] = transport(m.components()[static_cast<std::size_t>(i)], graph_ring);
  std::vector<Polynomial<K>> minors;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Polynomial<K> yi = Polynomial<K>::variable(graph_ring, 4 + i, dom.one());
      Polynomial<K> yj = Polynomial<K>::variable(graph_ring, 4 + j, dom.one());
      minors.push_back(yi * phi[static_cast<std::size_t>(j)] - yj * phi[static_cast<std::size_t>(i)]);
    }
  std::vector<Polynomial<K>> base_up;
  for (const auto& g : m.base_ideal().gens()) base_up.push_back(transport(g, graph_ring));

  Ideal<K> graph = saturation(Ideal<K>(graph_ring, std::move(minors)),
                              Ideal<K>(graph_ring, std::move(base_up)));
  Ideal<K> with_s = ideal_sum(graph, Ideal<K>(graph_ring, {transport(S, graph_ring)}));
  Ideal<K> eliminated = eliminate_prefix(with_s, 4);
  Ideal<K> image = saturation(eliminated,
                              Ideal<K>::irrelevant(eliminated.ring(), dom.one()));
  const HilbertData& hd = image.hilbert();
  return {image, hd.proj_dim, hd.degree};
}

namespace detail {

// Unique support point of a unipunctual zero-dimensional plane scheme, by
// the trace of the multiplication matrices on an affine chart.
template <class K>
std::optional<std::array<K, 3>> support_point(const Ideal<K>& I, const Domain<K>& dom,
                                              long long length) {
  const Ring& ring = I.ring();
  for (int chart = ring.arity() - 1; chart >= 0; --chart) {
    // Dehomogenize at the chart variable.
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < ring.arity(); ++i)
      images.push_back(i == chart ? Polynomial<K>::constant(ring, dom.one())
                                  : Polynomial<K>::variable(ring, i, dom.one()));
    std::vector<Polynomial<K>> affine;
    for (const auto& g : I.gens()) {
      Polynomial<K> a = substitute(g, std::span<const Polynomial<K>>(images));
      if (!a.is_zero()) affine.push_back(a);
    }
    Ideal<K> A(ring, std::move(affine));
    const auto& basis = A.groebner();
    if (basis.size() == 1 && basis[0].is_constant()) continue;  // no points on this chart
    // Standard monomials (chart variable unused in the affine generators).
    std::vector<Monomial> std_monos;
    for (unsigned deg = 0; static_cast<long long>(std_monos.size()) <= length + 1; ++deg) {
      bool found_any = false;
      for (const auto& mono : monomials_of_degree(ring.arity(), deg)) {
        if (mono.exp(chart)) continue;
        bool divisible = false;
        for (const auto& g : basis)
          if (g.lead_mono().divides(mono)) {
            divisible = true;
            break;
          }
        if (!divisible) {
          std_monos.push_back(mono);
          found_any = true;
        }
      }
      if (!found_any) break;
    }
    if (static_cast<long long>(std_monos.size()) != length) continue;  // points at infinity
    if (dom.from_int(length).is_zero()) continue;  // length not invertible in the field

    std::array<K, 3> point{dom.zero(), dom.zero(), dom.zero()};
    point[static_cast<std::size_t>(chart)] = dom.one();
    bool ok = true;
    for (int v = 0; v < ring.arity() && ok; ++v) {
      if (v == chart) continue;
      K trace = dom.zero();
      for (const auto& mono : std_monos) {
        Polynomial<K> xm = Polynomial<K>::term(ring, dom.one(), mono * Monomial::var(ring.arity(), v));
        Polynomial<K> nf = normal_form(xm, std::span<const Polynomial<K>>(basis),
                                       MonomialOrder::grevlex());
        // diagonal entry: coefficient of `mono` in NF(x_v * mono)
        for (const auto& t : nf.terms()) {
          if (t.mono == mono) trace += t.coeff;
        }
      }
      point[static_cast<std::size_t>(v)] = trace * dom.from_int(length).inv();
    }
    if (!ok) continue;
    // Verify the point actually lies on the scheme.
    bool on_scheme = true;
    for (const auto& g : I.gens())
      if (!g.evaluate(std::span<const K>(point.data(), 3)).is_zero()) {
        on_scheme = false;
        break;
      }
    if (on_scheme) return point;
  }
  return std::nullopt;
}

}  // namespace detail

// Geometric genus of a generic hyperplane section of the pullback of a
// generic target plane: take a random member of the linear system, restrict
// to a random plane, and classify the singular scheme of the resulting
// quartic. Exactly the profiles produced by honest quarto-quartic maps are
// classified; anything else errors out rather than guessing.
template <class K>
int genus(const RationalMap<K>& m, SeedStream& rng) {
  if (m.degree() != 4) throw StructuralError("genus is defined here for quartic maps only");
  const Domain<K>& dom = m.domain();
  const Ring& plane = Ring::plane();

  for (int attempt = 1; attempt <= 5; ++attempt) {
    try {
      // Random member of the linear system.
      Polynomial<K> member = Polynomial<K>::zero(m.ring());
      for (int i = 0; i < 4; ++i)
        member = member + m.components()[static_cast<std::size_t>(i)].scaled(dom.sample(rng));
      if (member.is_zero() || !member.is_homogeneous() || member.total_degree() != 4)
        throw DegenerateDraw("degenerate member of the linear system");
      // Restrict to the plane z3 = a z0 + b z1 + c z2.
      std::vector<Polynomial<K>> images;
      for (int i = 0; i < 3; ++i) images.push_back(Polynomial<K>::variable(plane, i, dom.one()));
      Polynomial<K> z3 = Polynomial<K>::zero(plane);
      for (int i = 0; i < 3; ++i)
        z3 = z3 + Polynomial<K>::variable(plane, i, dom.sample(rng));
      images.push_back(z3);
      Polynomial<K> q = substitute(member, std::span<const Polynomial<K>>(images));
      if (q.is_zero() || q.total_degree() != 4) throw DegenerateDraw("degenerate plane section");

      std::vector<Polynomial<K>> jac{q};
      for (int i = 0; i < 3; ++i) jac.push_back(partial_derivative(q, i));
      Ideal<K> J = saturation(Ideal<K>(plane, std::move(jac)),
                              Ideal<K>::irrelevant(plane, dom.one()));
      if (J.is_unit()) return 3;  // smooth plane quartic
      const HilbertData& hd = J.hilbert();
      if (hd.proj_dim != 0) throw DegenerateDraw("singular scheme of the section is not finite");
      long long L = hd.degree;
      long long n = count_distinct_points(J, dom, rng);
      if (n == 1 && L == 1) return 2;  // one node
      if (n == 2 && L == 2) return 1;  // two nodes
      if (n == 1 && L == 4) {
        auto pt = detail::support_point(J, dom, L);
        if (pt) {
          std::vector<Polynomial<K>> point_gens;
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
              Polynomial<K> zi = Polynomial<K>::variable(plane, i, dom.one());
              Polynomial<K> zj = Polynomial<K>::variable(plane, j, dom.one());
              Polynomial<K> mi = zi.scaled((*pt)[static_cast<std::size_t>(j)]) -
                                 zj.scaled((*pt)[static_cast<std::size_t>(i)]);
              if (!mi.is_zero()) point_gens.push_back(mi);
            }
          Ideal<K> point_cubed = ideal_power(Ideal<K>(plane, std::move(point_gens)), 3);
          if (point_cubed.contains(q)) return 0;  // ordinary triple point
        }
      }
      throw DegenerateDraw("unclassified singularity profile");
    } catch (const DegenerateDraw&) {
      if (attempt == 5) throw RetriesExhausted("unclassified singularity profile", attempt);
    }
  }
  throw RetriesExhausted("unclassified singularity profile", 5);
}

// The line carried by a singular scheme of dimension 1 and degree 1; used to
// recover the distinguished double line of a map from the map alone.
template <class K>
std::optional<Ideal<K>> line_from_sing_scheme(const RationalMap<K>& m) {
  SingSchemeResult<K> s = sing_scheme(m);
  if (s.beta != 1 || !s.eta || *s.eta != 1) return std::nullopt;
  auto linear = graded_piece(s.ideal, 1);
  if (linear.size() == 2) return Ideal<K>(m.ring(), {linear[0], linear[1]});
  // Isolated points hide the line from the degree-1 slice; strip them with a
  // double link through a complete intersection inside the ideal.
  const auto& gens = s.ideal.gens();
  if (gens.size() < 2) return std::nullopt;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Ideal<K> ci(m.ring(), {gens[a], gens[b]});
      if (ci.hilbert().proj_dim != 1) continue;
      Ideal<K> linked = saturation(ideal_quotient(ci, ideal_quotient(ci, s.ideal)),
                                   Ideal<K>::irrelevant(m.ring(), m.domain().one()));
      auto lin2 = graded_piece(linked, 1);
      if (lin2.size() == 2) return Ideal<K>(m.ring(), {lin2[0], lin2[1]});
    }
  return std::nullopt;
}

}  // namespace cremona
