#pragma once

#include <vector>

#include "cremona/monomial.hpp"
#include "cremona/rational.hpp"

namespace cremona {

// Hilbert data of a homogeneous quotient R/I, derived from the lead-term
// ideal. Conventions: `krull_dim` is the dimension of the affine cone,
// `proj_dim` = krull_dim - 1 (so the empty projective scheme has proj_dim -1
// and degree 0), `degree` is the degree of the projective scheme.
struct HilbertData {
  std::vector<long long> numerator;  // reduced numerator Q, ascending in t; Q(1) != 0
  int krull_dim = 0;
  int proj_dim = -1;
  long long degree = 0;
  std::vector<Rat> hilbert_poly;  // ascending coefficients; empty means P = 0
  // HF(d) equals the Hilbert polynomial for every d >= this bound.
  long long hf_equals_poly_from = 0;

  Rat hilbert_poly_at(long long t) const {
    Rat acc;
    Rat x(t);
    for (std::size_t i = hilbert_poly.size(); i-- > 0;) acc = acc * x + hilbert_poly[i];
    return acc;
  }
};

// Hilbert data of R/(lead terms) in `arity` variables. The generator list
// need not be minimal.
HilbertData hilbert_from_lead_monomials(int arity, std::vector<Monomial> lead);

}  // namespace cremona
