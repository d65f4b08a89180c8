#include "cremona/families.hpp"

#include "cremona/parse.hpp"

namespace cremona {

namespace {

// Indices of the plane coordinates left free on each of the three concurrent
// lines (z1,z2), (z2,z0), (z0,z1): all pass through (0:0:0:1).
constexpr int kFreePairs[3][2] = {{0, 3}, {1, 3}, {2, 3}};

Polynomial<Rat> cone_through(const Ring& ring, const Domain<Rat>& dom,
                             const std::vector<std::vector<Rat>>& pts) {
  std::vector<Monomial> basis = monomials_of_degree(4, 2);
  MonoLess less{MonomialOrder::grevlex()};
  std::map<Monomial, int, MonoLess> col(less);
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = static_cast<int>(i);

  const int rows = 9 + static_cast<int>(pts.size());
  DenseMatrix<Rat> sys(rows, static_cast<int>(basis.size()), dom.zero());
  int r = 0;
  for (const auto& pair : kFreePairs) {
    int a = pair[0], b = pair[1];
    Monomial squares[3] = {Monomial::var(4, a, 2), Monomial::var(4, a) * Monomial::var(4, b),
                           Monomial::var(4, b, 2)};
    for (const auto& m : squares) sys.at(r++, col.at(m)) = dom.one();
  }
  for (const auto& p : pts) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Rat v = dom.one();
      for (int i = 0; i < 4; ++i)
        for (unsigned e = 0; e < basis[c].exp(i); ++e) v = v * p[static_cast<std::size_t>(i)];
      sys.at(r, static_cast<int>(c)) = v;
    }
    ++r;
  }
  auto kernel = sys.kernel_basis();
  if (kernel.size() != 1) throw DegenerateDraw("cone incidence system is singular");
  std::vector<Term<Rat>> terms;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (!kernel[0][c].is_zero()) terms.push_back({basis[c], kernel[0][c]});
  return scale_canonical(Polynomial<Rat>(ring, std::move(terms)));
}

}  // namespace

FamilyMember<Rat> make_loria() {
  const Ring& ring = Ring::p3();
  Domain<Rat> dom;
  SeedStream rng(20090, 'L');
  return detail::with_retries("three-concurrent-lines construction", 5, [&] {
    // Three general points in the plane z3 = 0.
    std::vector<std::vector<Rat>> pts;
    for (int j = 0; j < 3; ++j) {
      std::vector<Rat> p{dom.sample_nonzero(rng), dom.sample_nonzero(rng),
                         dom.sample_nonzero(rng), dom.zero()};
      pts.push_back(std::move(p));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        bool equal = true;
        // projective equality would also be degenerate; small coordinates,
        // so cross products decide it
        for (int a = 0; a < 3 && equal; ++a)
          for (int b = a + 1; b < 3 && equal; ++b)
            if (!(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                      pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] -
                  pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] *
                      pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)])
                     .is_zero())
              equal = false;
        if (equal) throw DegenerateDraw("coincident plane points");
      }

    std::array<Polynomial<Rat>, 3> cones;
    for (int j = 0; j < 3; ++j) {
      std::vector<std::vector<Rat>> other;
      for (int k = 0; k < 3; ++k)
        if (k != j) other.push_back(pts[static_cast<std::size_t>(k)]);
      cones[static_cast<std::size_t>(j)] = cone_through(ring, dom, other);
    }

    Polynomial<Rat> z0z1z2z3 = Polynomial<Rat>::term(
        ring, dom.one(),
        Monomial::var(4, 0) * Monomial::var(4, 1) * Monomial::var(4, 2) * Monomial::var(4, 3));
    std::array<Polynomial<Rat>, 4> comps{cones[1] * cones[2], cones[0] * cones[2],
                                         cones[0] * cones[1], z0z1z2z3};
    RationalMap<Rat> map(ring, std::move(comps), dom, "loria");
    FamilyMember<Rat> member{map, std::nullopt, std::nullopt, std::nullopt, ExpectedRow{},
                             "loria"};
    member.expected.d1 = 4;
    member.expected.d2 = 4;
    return member;
  });
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long dimension_formula(char family, int d) {
  switch (family) {
    case 'J':
      if (d < 2) break;
      return 2LL * d * d + 2 * d + 14;
    case 'R':
      if (d < 2) break;
      return 6LL * d + 13;
    case 'D':
      if (d != 4) break;
      return 46;
    case 'C':
      if (d != 4) break;
      return 37;
    default:
      break;
  }
  throw StructuralError(std::string("dimension formula unsupported for family ") + family +
                        " at d = " + std::to_string(d));
}

bool dimension_identity_holds(char family, int d) {
  switch (family) {
    case 'J':
      // parameter count: pencil members up to factor, the point, and the
      // target frame
      return binomial(d, d - 2) + 2 * binomial(d + 1, d - 1) + binomial(d + 2, d) + 13 ==
             dimension_formula('J', d);
    case 'R':
      // spine, incident lines, simple points, target frame
      return 4 + 3 * (d - 1) + 3 * (d - 1) + 15 == dimension_formula('R', d);
    case 'D':
      // the four divisor choices minus the frame of the pencil
      return d == 4 && 7 + 7 + 15 + 21 - 4 == dimension_formula('D', 4);
    case 'C':
      // quadric, biquadratic, plane, point, target frame
      return d == 4 && 9 + 7 + 3 + 3 + 15 == dimension_formula('C', 4);
    default:
      throw StructuralError(std::string("unknown family ") + family);
  }
}

ExpectedRow expected_row(char family, int d) {
  ExpectedRow e;
  e.d1 = d;
  e.d2 = d;
  switch (family) {
    case 'J':
      e.alpha = static_cast<long long>(d) * (d - 1);
      if (d == 4) {
        e.beta = 0;
        e.genus = 3;
        e.deg_c1 = 4;
        e.deg_c2 = 12;
      }
      return e;
    case 'R':
      e.alpha = static_cast<long long>(d + 2) * (d - 1) / 2;
      if (d == 4) {
        e.beta = 1;
        e.eta = 3;
        e.genus = 0;
      }
      return e;
    case 'D':
      if (d == 4) {
        e.alpha = 11;
        e.beta = 1;
        e.eta = 1;
        e.genus = 2;
        e.deg_c1 = 4;
        e.deg_c2 = 12;
        return e;
      }
      break;
    case 'C':
      if (d == 4) {
        e.alpha = 10;
        e.beta = 1;
        e.eta = 2;
        e.genus = 1;
        e.deg_c1 = 4;
        e.deg_c2 = 12;
        return e;
      }
      break;
    default:
      break;
  }
  throw StructuralError(std::string("no expected row for family ") + family + " at d = " +
                        std::to_string(d));
}

}  // namespace cremona
