#pragma once

#include "cremona/families.hpp"

namespace cremona {

// The determinantal deep suite: exact structure checks on a constructed
// member beyond the invariant table. Every entry is an integer equality.
template <class K>
std::vector<CheckResult> deep_determinantal_checks(const FamilyMember<K>& member) {
  std::vector<CheckResult> checks;
  const RationalMap<K>& tau = member.map;
  if (!member.inverse || !member.delta || !member.gamma)
    throw StructuralError("deep checks need the inverse and the line/curve witnesses");
  const Ideal<K>& gamma = *member.gamma;
  const Ideal<K>& delta = *member.delta;

  // Curve data: Hilbert polynomial 8t - 4 (degree 8, arithmetic genus 5).
  const HilbertData& hg = gamma.hilbert();
  detail::add_check(checks, "curve.dim", 1, hg.proj_dim);
  detail::add_check(checks, "curve.degree", 8, hg.degree);
  bool linear = hg.hilbert_poly.size() == 2;
  detail::add_check(checks, "curve.hilbert.constant", -4,
                    linear && hg.hilbert_poly[0].is_integer()
                        ? std::optional<long long>(
                              static_cast<long long>(hg.hilbert_poly[0].numerator().get_si()))
                        : std::nullopt);

  detail::add_check(checks, "secant.length", 5, secant_length(gamma, delta));

  detail::add_check(checks, "base.quartics", 4,
                    static_cast<long long>(graded_piece(tau.base_ideal(), 4).size()));

  auto cubics = graded_piece(gamma, 3);
  detail::add_check(checks, "curve.cubics", 1, static_cast<long long>(cubics.size()));

  try {
    Polynomial<K> c = compose_check(tau, *member.inverse);
    detail::add_check(checks, "compose.factor.degree", 15,
                      static_cast<long long>(c.total_degree()));
  } catch (const StructuralError&) {
    detail::add_check(checks, "compose.factor.degree", 15, std::nullopt, "not an inverse");
  }

  if (cubics.size() == 1) {
    auto quotient = exact_divide(jacobian(tau), cubics[0]);
    detail::add_check(checks, "jacobian.cofactor.degree", 9,
                      quotient ? std::optional<long long>(quotient->total_degree())
                               : std::nullopt,
                      quotient ? "" : "cubic does not divide the jacobian");
  } else {
    detail::add_check(checks, "jacobian.cofactor.degree", 9, std::nullopt,
                      "no unique cubic through the curve");
  }
  return checks;
}

// The contraction suite: scheme-theoretic images of the two contracted
// surfaces. This drives the graph-ideal elimination and is by far the
// heaviest computation in the project.
template <class K>
std::vector<CheckResult> contraction_checks(const FamilyMember<K>& member) {
  std::vector<CheckResult> checks;
  const RationalMap<K>& tau = member.map;
  const RationalMap<K>& tau_prime = *member.inverse;

  auto cubics = graded_piece(*member.gamma, 3);
  if (cubics.size() != 1) throw StructuralError("contraction checks need the unique cubic");
  const Polynomial<K>& s3 = cubics[0];

  ImageResult<K> im3 = image_of_hypersurface(tau, s3);
  detail::add_check(checks, "image.cubic.dim", 1, im3.proj_dim);
  detail::add_check(checks, "image.cubic.degree", 1, im3.degree);

  // The image line must be the 5-secant line of the inverse's base curve.
  auto delta_prime = line_from_sing_scheme(tau_prime);
  detail::add_check(checks, "inverse.line.found", 1, delta_prime ? 1 : 0);
  if (delta_prime) {
    Ideal<K> gamma_prime = saturation(tau_prime.base_ideal(), *delta_prime);
    detail::add_check(checks, "inverse.secant.length", 5,
                      secant_length(gamma_prime, *delta_prime));
    Ideal<K> image_in_source = reindex(im3.ideal, tau.ring());
    detail::add_check(checks, "image.cubic.is.secant.line", 1,
                      image_in_source.equals(*delta_prime) ? 1 : 0);
  }

  auto s9 = exact_divide(jacobian(tau), s3);
  if (!s9) throw StructuralError("cubic does not divide the jacobian");
  ImageResult<K> im9 = image_of_hypersurface(tau, *s9);
  detail::add_check(checks, "image.ruled.dim", 1, im9.proj_dim);
  detail::add_check(checks, "image.ruled.degree", 8, im9.degree);
  return checks;
}

}  // namespace cremona
