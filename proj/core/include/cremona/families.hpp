#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/analysis.hpp"
#include "cremona/polymatrix.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

// A constructed family member: the map plus the construction witnesses that
// the deeper checks consume.
template <class K>
struct FamilyMember {
  RationalMap<K> map;
  std::optional<RationalMap<K>> inverse;  // closed-form inverse when one exists
  std::optional<Ideal<K>> delta;          // distinguished line
  std::optional<Ideal<K>> gamma;          // distinguished curve
  ExpectedRow expected;
  std::string family;
};

namespace detail {

template <class Fn>
auto with_retries(const std::string& what, int attempts, Fn&& fn) {
  for (int i = 1;; ++i) {
    try {
      return fn();
    } catch (const DegenerateDraw& e) {
      if (i >= attempts) throw RetriesExhausted(what + ": " + e.condition, attempts);
    }
  }
}

// Random homogeneous form of the given degree supported on the first
// `var_limit` variables (all of them when var_limit < 0).
template <class K>
Polynomial<K> random_form(const Ring& ring, const Domain<K>& dom, SeedStream& rng,
                          unsigned degree, int var_limit = -1) {
  const int limit = var_limit < 0 ? ring.arity() : var_limit;
  std::vector<Term<K>> terms;
  for (const auto& m : monomials_of_degree(ring.arity(), degree)) {
    bool ok = true;
    for (int i = limit; i < ring.arity(); ++i)
      if (m.exp(i)) ok = false;
    if (!ok) continue;
    K c = dom.sample(rng);
    if (!c.is_zero()) terms.push_back({m, c});
  }
  if (terms.empty()) throw DegenerateDraw("random form vanished");
  return Polynomial<K>(ring, std::move(terms));
}

template <class K>
std::vector<K> random_point(const Domain<K>& dom, SeedStream& rng, int n) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<K> p;
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      p.push_back(dom.sample(rng));
      if (!p.back().is_zero()) nonzero = true;
    }
    if (nonzero) return p;
  }
  throw DegenerateDraw("random point");
}

// Homogeneous ideal of a point: 2x2 minors of the coordinate row against the
// point row.
template <class K>
Ideal<K> point_ideal(const Ring& ring, const Domain<K>& dom, const std::vector<K>& p) {
  std::vector<Polynomial<K>> gens;
  const int n = ring.arity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial<K> g =
          Polynomial<K>::variable(ring, i, dom.one()).scaled(p[static_cast<std::size_t>(j)]) -
          Polynomial<K>::variable(ring, j, dom.one()).scaled(p[static_cast<std::size_t>(i)]);
      if (!g.is_zero()) gens.push_back(g);
    }
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
bool point_on_scheme(const Ideal<K>& I, const std::vector<K>& p) {
  for (const auto& g : I.gens())
    if (!g.evaluate(std::span<const K>(p.data(), p.size())).is_zero()) return false;
  return true;
}

// Apply a scalar matrix to a vector of polynomials.
template <class K>
std::vector<Polynomial<K>> matrix_apply(const DenseMatrix<K>& M,
                                        const std::vector<Polynomial<K>>& v) {
  if (static_cast<int>(v.size()) != M.cols()) throw StructuralError("matrix_apply shape mismatch");
  std::vector<Polynomial<K>> out;
  const Ring& ring = v.front().ring();
  for (int i = 0; i < M.rows(); ++i) {
    Polynomial<K> acc = Polynomial<K>::zero(ring);
    for (int j = 0; j < M.cols(); ++j)
      acc = acc + v[static_cast<std::size_t>(j)].scaled(M.at(i, j));
    out.push_back(acc);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Monoidal family

template <class K>
struct JonquieresParams {
  int d;
  // Forms in z0,z1,z2 of the indicated degrees; the distinguished point is
  // (0:0:0:1), i.e. coordinates are chosen with its ideal (z0,z1,z2).
  Polynomial<K> p_dm1, p_d, q_dm2, q_dm1;
};

template <class K>
FamilyMember<K> make_jonquieres(const Domain<K>& dom, const JonquieresParams<K>& params) {
  const Ring& ring = Ring::p3();
  const int d = params.d;
  if (d < 2) throw StructuralError("monoidal family needs d >= 2");
  Polynomial<K> z3 = Polynomial<K>::variable(ring, 3, dom.one());
  Polynomial<K> s_dm1 = z3 * params.q_dm2 + params.q_dm1;
  Polynomial<K> s_d = z3 * params.p_dm1 + params.p_d;
  if (s_dm1.is_zero() || s_d.is_zero()) throw DegenerateDraw("monoidal pencil degenerate");
  if (params.p_dm1 * params.q_dm1 == params.p_d * params.q_dm2)
    throw DegenerateDraw("monoidal determinant vanishes");
  // gcd surrogate: the pencil pair must cut a codimension-2 scheme.
  Ideal<K> pencil = saturation(Ideal<K>(ring, {s_dm1, s_d}),
                               Ideal<K>::irrelevant(ring, dom.one()));
  if (pencil.is_unit() || pencil.hilbert().proj_dim != 1)
    throw DegenerateDraw("pencil members share a factor");

  std::array<Polynomial<K>, 4> comps{
      Polynomial<K>::variable(ring, 0, dom.one()) * s_dm1,
      Polynomial<K>::variable(ring, 1, dom.one()) * s_dm1,
      Polynomial<K>::variable(ring, 2, dom.one()) * s_dm1, s_d};
  RationalMap<K> map(ring, std::move(comps), dom, "J d=" + std::to_string(d));

  Polynomial<K> t = params.p_dm1 - z3 * params.q_dm2;
  Polynomial<K> u = z3 * params.q_dm1 - params.p_d;
  std::array<Polynomial<K>, 4> inv{Polynomial<K>::variable(ring, 0, dom.one()) * t,
                                   Polynomial<K>::variable(ring, 1, dom.one()) * t,
                                   Polynomial<K>::variable(ring, 2, dom.one()) * t, u};
  RationalMap<K> inverse(ring, std::move(inv), dom, "J inverse d=" + std::to_string(d));

  FamilyMember<K> member{map, inverse, std::nullopt, std::nullopt, ExpectedRow{}, "J"};
  member.expected.d1 = d;
  member.expected.d2 = d;
  member.expected.alpha = static_cast<long long>(d) * (d - 1);
  if (d == 4) {
    member.expected.beta = 0;
    member.expected.genus = 3;
    member.expected.deg_c1 = 4;
    member.expected.deg_c2 = 12;
  }
  return member;
}

template <class K>
FamilyMember<K> make_jonquieres(const Domain<K>& dom, int d, SeedStream& rng) {
  const Ring& ring = Ring::p3();
  return detail::with_retries("monoidal construction", 5, [&] {
    JonquieresParams<K> p{d,
                          detail::random_form(ring, dom, rng, static_cast<unsigned>(d - 1), 3),
                          detail::random_form(ring, dom, rng, static_cast<unsigned>(d), 3),
                          detail::random_form(ring, dom, rng, static_cast<unsigned>(d - 2), 3),
                          detail::random_form(ring, dom, rng, static_cast<unsigned>(d - 1), 3)};
    return make_jonquieres(dom, p);
  });
}

// ---------------------------------------------------------------------------
// Ruled family

template <class K>
FamilyMember<K> make_ruled(const Domain<K>& dom, int d, SeedStream& rng) {
  if (d < 2) throw StructuralError("ruled family needs d >= 2");
  const Ring& ring = Ring::p3();
  return detail::with_retries("ruled construction", 5, [&] {
    Ideal<K> delta(ring, {Polynomial<K>::variable(ring, 0, dom.one()),
                          Polynomial<K>::variable(ring, 1, dom.one())});
    std::vector<Ideal<K>> lines;
    for (int j = 0; j < d - 1; ++j) {
      // l_j in (z0,z1) keeps the line incident to delta; l'_j leaves it.
      Polynomial<K> lj = Polynomial<K>::variable(ring, 0, dom.one()).scaled(dom.sample(rng)) +
                         Polynomial<K>::variable(ring, 1, dom.one()).scaled(dom.sample_nonzero(rng));
      Polynomial<K> lpj = Polynomial<K>::variable(ring, 0, dom.one()).scaled(dom.sample(rng)) +
                          Polynomial<K>::variable(ring, 1, dom.one()).scaled(dom.sample(rng)) +
                          Polynomial<K>::variable(ring, 2, dom.one()).scaled(dom.sample(rng)) +
                          Polynomial<K>::variable(ring, 3, dom.one()).scaled(dom.sample_nonzero(rng));
      lines.emplace_back(ring, std::vector<Polynomial<K>>{lj, lpj});
    }
    // Incidence certificates.
    for (int i = 0; i < d - 1; ++i) {
      if (secant_length(lines[static_cast<std::size_t>(i)], delta) != 1)
        throw DegenerateDraw("line does not meet the spine in length 1");
      for (int j = i + 1; j < d - 1; ++j)
        if (secant_length(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]) != 0)
          throw DegenerateDraw("auxiliary lines intersect");
    }
    std::vector<std::vector<K>> pts;
    for (int k = 0; k < d - 1; ++k) {
      std::vector<K> p = detail::random_point(dom, rng, 4);
      if (detail::point_on_scheme(delta, p)) throw DegenerateDraw("point on the spine");
      for (const auto& L : lines)
        if (detail::point_on_scheme(L, p)) throw DegenerateDraw("point on an auxiliary line");
      pts.push_back(std::move(p));
    }

    Ideal<K> ideal = ideal_power(delta, d - 1);
    for (const auto& L : lines) ideal = ideal_intersection(ideal, L);
    for (const auto& p : pts) ideal = ideal_intersection(ideal, detail::point_ideal(ring, dom, p));

    auto piece = graded_piece(ideal, static_cast<unsigned>(d));
    if (piece.size() != 4) throw DegenerateDraw("graded piece dimension is not 4");
    RationalMap<K> map(ring, {piece[0], piece[1], piece[2], piece[3]}, dom,
                       "R d=" + std::to_string(d));

    FamilyMember<K> member{map, std::nullopt, delta, std::nullopt, ExpectedRow{}, "R"};
    member.expected.d1 = d;
    member.expected.d2 = d;
    member.expected.alpha = static_cast<long long>(d + 2) * (d - 1) / 2;
    if (d == 4) {
      member.expected.beta = 1;
      member.expected.eta = 3;
      member.expected.genus = 0;
    }
    return member;
  });
}

// ---------------------------------------------------------------------------
// Determinantal family

template <class K>
struct DetParams {
  DenseMatrix<K> n0, n1;  // 4x2
  DenseMatrix<K> m;       // 4x4
  DenseMatrix<K> u0, u1;  // 4x4; T_lambda = lambda_0 U0 + lambda_1 U1
  DenseMatrix<K> b;       // 2x2 pairing fixing the wedge generator of L
};

// The worked matrices: N0 = N1 the coordinate inclusion, M the identity,
// U0/U1 the two cyclic shifts, B the standard symplectic pairing.
template <class K>
DetParams<K> explicit_det_params(const Domain<K>& dom) {
  DetParams<K> p{DenseMatrix<K>(4, 2, dom.zero()), DenseMatrix<K>(4, 2, dom.zero()),
                 DenseMatrix<K>::identity(4, dom.one()), DenseMatrix<K>(4, 4, dom.zero()),
                 DenseMatrix<K>(4, 4, dom.zero()), DenseMatrix<K>(2, 2, dom.zero())};
  p.n0.at(0, 0) = dom.one();
  p.n0.at(1, 1) = dom.one();
  p.n1.at(0, 0) = dom.one();
  p.n1.at(1, 1) = dom.one();
  for (int i = 0; i < 4; ++i) p.u0.at(i, (i + 1) % 4) = dom.one();
  for (int i = 0; i < 4; ++i) p.u1.at(i, (i + 3) % 4) = dom.one();
  p.b.at(0, 1) = -dom.one();
  p.b.at(1, 0) = dom.one();
  return p;
}

// The 4x3 matrix with two linear columns and one quadratic column whose
// signed maximal minors define the map.
template <class K>
PolyMatrix<K> determinantal_matrix(const Domain<K>& dom, const DetParams<K>& p, bool primed) {
  const Ring& ring = Ring::p3();
  std::vector<Polynomial<K>> z;
  for (int i = 0; i < 4; ++i) z.push_back(Polynomial<K>::variable(ring, i, dom.one()));

  const DenseMatrix<K>& na = primed ? p.n1 : p.n0;
  const DenseMatrix<K>& nb = primed ? p.n0 : p.n1;
  // lambda = B . (na)^T . z, a pair of linear forms.
  std::vector<Polynomial<K>> lambda = detail::matrix_apply(p.b, detail::matrix_apply(na.transpose(), z));
  std::vector<Polynomial<K>> g0 = detail::matrix_apply(nb, lambda);
  if (primed)
    for (auto& g : g0) g = -g;
  std::vector<Polynomial<K>> g1 = detail::matrix_apply(primed ? p.m.transpose() : p.m, z);
  const DenseMatrix<K> ua = primed ? p.u0.transpose() : p.u0;
  const DenseMatrix<K> ub = primed ? p.u1.transpose() : p.u1;
  std::vector<Polynomial<K>> u0z = detail::matrix_apply(ua, z);
  std::vector<Polynomial<K>> u1z = detail::matrix_apply(ub, z);
  std::vector<Polynomial<K>> g2;
  for (int i = 0; i < 4; ++i)
    g2.push_back(lambda[0] * u0z[static_cast<std::size_t>(i)] +
                 lambda[1] * u1z[static_cast<std::size_t>(i)]);

  PolyMatrix<K> G(4, 3, Polynomial<K>::zero(ring));
  for (int i = 0; i < 4; ++i) {
    G.at(i, 0) = g0[static_cast<std::size_t>(i)];
    G.at(i, 1) = g1[static_cast<std::size_t>(i)];
    G.at(i, 2) = g2[static_cast<std::size_t>(i)];
  }
  return G;
}

template <class K>
std::array<Polynomial<K>, 4> signed_minors(const PolyMatrix<K>& G) {
  std::array<Polynomial<K>, 4> comps{minor_without_row(G, 0), -minor_without_row(G, 1),
                                     minor_without_row(G, 2), -minor_without_row(G, 3)};
  return comps;
}

template <class K>
FamilyMember<K> make_determinantal(const Domain<K>& dom, const DetParams<K>& params) {
  const Ring& ring = Ring::p3();
  if (params.n0.rank() != 2 || params.n1.rank() != 2)
    throw DegenerateDraw("N0 or N1 is not of rank 2");
  if (!params.b.inverse() || !params.m.inverse())
    throw DegenerateDraw("B or M is singular");
  {
    DenseMatrix<K> stacked(2, 16, dom.zero());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        stacked.at(0, i * 4 + j) = params.u0.at(i, j);
        stacked.at(1, i * 4 + j) = params.u1.at(i, j);
      }
    if (stacked.rank() != 2) throw DegenerateDraw("U0 and U1 are dependent");
  }

  PolyMatrix<K> G = determinantal_matrix(dom, params, false);
  RationalMap<K> tau(ring, signed_minors(G), dom, "D");
  PolyMatrix<K> Gp = determinantal_matrix(dom, params, true);
  RationalMap<K> tau_prime(ring, signed_minors(Gp), dom, "D inverse");

  // Construction-success certificate: base curve of codimension 2, degree 11.
  const Ideal<K>& base = tau.base_ideal();
  if (base.is_unit() || base.hilbert().proj_dim != 1 || base.hilbert().degree != 11)
    throw DegenerateDraw("base scheme is not a degree-11 curve");

  // The distinguished line is the degree-1 part of the singular scheme; the
  // distinguished curve is the residual of its double structure.
  auto delta = line_from_sing_scheme(tau);
  if (!delta) throw DegenerateDraw("singular scheme carries no line");
  Ideal<K> gamma = saturation(base, *delta);

  FamilyMember<K> member{tau, tau_prime, delta, gamma, ExpectedRow{}, "D"};
  member.expected.d1 = 4;
  member.expected.d2 = 4;
  member.expected.alpha = 11;
  member.expected.beta = 1;
  member.expected.eta = 1;
  member.expected.genus = 2;
  member.expected.deg_c1 = 4;
  member.expected.deg_c2 = 12;
  return member;
}

template <class K>
FamilyMember<K> make_determinantal(const Domain<K>& dom, SeedStream& rng) {
  return detail::with_retries("determinantal construction", 5, [&] {
    DetParams<K> p{random_matrix(dom, rng, 4, 2), random_matrix(dom, rng, 4, 2),
                   random_invertible(dom, rng, 4), random_matrix(dom, rng, 4, 4),
                   random_matrix(dom, rng, 4, 4), DenseMatrix<K>(2, 2, dom.zero())};
    p.b.at(0, 1) = -dom.one();
    p.b.at(1, 0) = dom.one();
    return make_determinantal(dom, p);
  });
}

// ---------------------------------------------------------------------------
// Double-conic family

template <class K>
struct ConicParams {
  Polynomial<K> q1;  // quadric through the distinguished point
  Polynomial<K> q2;  // quadric cone: a form in z0,z1,z2 only
  Polynomial<K> f;   // plane
  std::vector<K> p1; // extra base point
};

template <class K>
FamilyMember<K> make_conic(const Domain<K>& dom, const ConicParams<K>& params) {
  const Ring& ring = Ring::p3();
  std::vector<Polynomial<K>> zs;
  for (int i = 0; i < 3; ++i) zs.push_back(Polynomial<K>::variable(ring, i, dom.one()));
  const Polynomial<K>& f = params.f;
  const Polynomial<K>& q1 = params.q1;
  const Polynomial<K>& q2 = params.q2;
  std::vector<Polynomial<K>> gens{f * f * q2, q1 * q1, f * q1 * zs[0], f * q1 * zs[1],
                                  f * q1 * zs[2]};
  Ideal<K> g5(ring, std::move(gens));
  Ideal<K> ideal = ideal_intersection(g5, detail::point_ideal(ring, dom, params.p1));
  auto piece = graded_piece(ideal, 4);
  if (piece.size() != 4) throw DegenerateDraw("graded piece dimension is not 4");
  RationalMap<K> map(ring, {piece[0], piece[1], piece[2], piece[3]}, dom, "C");

  FamilyMember<K> member{map, std::nullopt, std::nullopt, std::nullopt, ExpectedRow{}, "C"};
  member.expected.d1 = 4;
  member.expected.d2 = 4;
  member.expected.alpha = 10;
  member.expected.beta = 1;
  member.expected.eta = 2;
  member.expected.genus = 1;
  member.expected.deg_c1 = 4;
  member.expected.deg_c2 = 12;
  return member;
}

template <class K>
FamilyMember<K> make_conic(const Domain<K>& dom, SeedStream& rng) {
  const Ring& ring = Ring::p3();
  return detail::with_retries("double-conic construction", 5, [&] {
    // Q1 vanishes at (0:0:0:1); Q2 lies in the square of that point's ideal.
    Polynomial<K> z3 = Polynomial<K>::variable(ring, 3, dom.one());
    ConicParams<K> p{z3 * detail::random_form(ring, dom, rng, 1, 3) +
                         detail::random_form(ring, dom, rng, 2, 3),
                     detail::random_form(ring, dom, rng, 2, 3),
                     detail::random_form(ring, dom, rng, 1),
                     detail::random_point(dom, rng, 4)};
    return make_conic(dom, p);
  });
}

// ---------------------------------------------------------------------------
// The classical three-concurrent-lines example

// Fixed construction over the rationals: the three coordinate lines through
// (0:0:0:1), three general points in the plane z3 = 0, and for each point
// pair the unique quadric cone through the lines and that pair. The cones
// are solved from the incidence system, not hardcoded.
FamilyMember<Rat> make_loria();

// ---------------------------------------------------------------------------
// Closed-form family dimensions

long long binomial(int n, int k);
long long dimension_formula(char family, int d);
bool dimension_identity_holds(char family, int d);

// Expected invariant rows of the four families at d = 4, in table order.
ExpectedRow expected_row(char family, int d);

}  // namespace cremona
