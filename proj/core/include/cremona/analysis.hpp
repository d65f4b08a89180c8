#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/ratmap.hpp"

namespace cremona {

// Expected invariant profile of a family member; drives the table checks.
struct ExpectedRow {
  int d1 = 0;
  std::optional<long long> d2;
  std::optional<long long> alpha;
  std::optional<int> beta;
  std::optional<long long> eta;
  std::optional<int> genus;
  std::optional<long long> deg_c1;
  std::optional<long long> deg_c2;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::optional<long long> expected;
  std::optional<long long> got;
  std::string note;
};

// Computed invariant record of one rational map.
struct MapAnalysis {
  int d1 = 0;
  std::optional<long long> d2;
  bool birational = false;
  long long alpha = 0;  // degree of the 1-dimensional base scheme, 0 if finite
  int beta = -1;        // dimension of the singular scheme, -1 if empty
  std::optional<long long> eta;
  std::optional<long long> deg_c1;
  std::optional<long long> deg_c2;
  std::optional<int> genus_value;
  std::string genus_error;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_check(std::vector<CheckResult>& checks, const std::string& id, long long expected,
                      std::optional<long long> got, const std::string& note = "") {
  CheckResult c;
  c.id = id;
  c.expected = expected;
  c.got = got;
  c.pass = got.has_value() && *got == expected;
  c.note = note;
  checks.push_back(c);
}

}  // namespace detail

template <class K>
MapAnalysis analyze(const RationalMap<K>& m, std::uint64_t seed,
                    const std::optional<ExpectedRow>& expected = std::nullopt) {
  MapAnalysis a;
  a.d1 = m.degree();

  const Ideal<K>& base = m.base_ideal();
  if (!base.is_unit()) {
    const HilbertData& hb = base.hilbert();
    a.alpha = hb.proj_dim == 1 ? hb.degree : 0;
  }

  SingSchemeResult<K> s = sing_scheme(m);
  a.beta = s.beta;
  a.eta = s.eta;

  SeedStream bir_rng(seed, 101);
  BirationalCertificate<K> cert = is_birational(m, bir_rng);
  a.birational = cert.birational;
  if (a.birational) {
    SeedStream deg_rng(seed, 202);
    a.d2 = inverse_degree(m, deg_rng);
    a.deg_c1 = a.d2;
    a.deg_c2 = static_cast<long long>(a.d1) * a.d1 - *a.d2;
    if (a.d1 == 4) {
      try {
        SeedStream genus_rng(seed, 303);
        a.genus_value = genus(m, genus_rng);
      } catch (const RetriesExhausted& e) {
        a.genus_error = e.condition;
      }
    }
  }

  if (expected) {
    const ExpectedRow& e = *expected;
    detail::add_check(a.checks, "bidegree.d1", e.d1, a.d1);
    if (e.d2) detail::add_check(a.checks, "bidegree.d2", *e.d2, a.d2);
    if (e.alpha) detail::add_check(a.checks, "alpha", *e.alpha, a.alpha);
    if (e.beta) detail::add_check(a.checks, "beta", *e.beta, a.beta);
    if (e.eta) detail::add_check(a.checks, "eta", *e.eta, a.eta);
    if (e.genus)
      detail::add_check(a.checks, "genus", *e.genus,
                        a.genus_value ? std::optional<long long>(*a.genus_value) : std::nullopt,
                        a.genus_error);
    if (e.deg_c1) detail::add_check(a.checks, "degC1", *e.deg_c1, a.deg_c1);
    if (e.deg_c2) detail::add_check(a.checks, "degC2", *e.deg_c2, a.deg_c2);
  }
  return a;
}

}  // namespace cremona
