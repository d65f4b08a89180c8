#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include "cremona/families.hpp"
#include "cremona/parse.hpp"

namespace cremona {

// Fixture file format (one map per file):
//   ring z0 z1 z2 z3
//   field prime 32003      |  field rationals
//   seed 1
//   family D
//   degree 4
//   component <polynomial>            (exactly four lines)
//   expect <name> <integer>           (optional expected invariants)
//   section <name> ... end            (labeled witness polynomial lists)

template <class K>
struct Fixture {
  Domain<K> dom;
  RationalMap<K> map;
  std::uint64_t seed = 0;
  std::string family;
  std::optional<ExpectedRow> expect;
  std::map<std::string, std::vector<Polynomial<K>>> sections;
};

using AnyFixture = std::variant<Fixture<Fp>, Fixture<Rat>>;

namespace detail {

template <class K>
void write_expect_lines(std::ostream& os, const ExpectedRow& e) {
  os << "expect d1 " << e.d1 << "\n";
  if (e.d2) os << "expect d2 " << *e.d2 << "\n";
  if (e.alpha) os << "expect alpha " << *e.alpha << "\n";
  if (e.beta) os << "expect beta " << *e.beta << "\n";
  if (e.eta) os << "expect eta " << *e.eta << "\n";
  if (e.genus) os << "expect genus " << *e.genus << "\n";
  if (e.deg_c1) os << "expect degC1 " << *e.deg_c1 << "\n";
  if (e.deg_c2) os << "expect degC2 " << *e.deg_c2 << "\n";
}

}  // namespace detail

template <class K>
void write_fixture(std::ostream& os, const FamilyMember<K>& member, std::uint64_t seed) {
  const RationalMap<K>& m = member.map;
  os << "ring " << m.ring().describe() << "\n";
  os << "field " << m.domain().describe() << "\n";
  os << "seed " << seed << "\n";
  if (!member.family.empty()) os << "family " << member.family << "\n";
  os << "degree " << m.degree() << "\n";
  for (const auto& c : m.components()) os << "component " << to_grammar_string(c) << "\n";
  detail::write_expect_lines<K>(os, member.expected);
  if (member.inverse) {
    os << "section inverse\n";
    for (const auto& c : member.inverse->components()) os << to_grammar_string(c) << "\n";
    os << "end\n";
  }
  if (member.delta) {
    os << "section delta\n";
    for (const auto& g : member.delta->gens()) os << to_grammar_string(g) << "\n";
    os << "end\n";
  }
  if (member.gamma) {
    os << "section gamma\n";
    for (const auto& g : member.gamma->gens()) os << to_grammar_string(g) << "\n";
    os << "end\n";
  }
}

namespace detail {

struct RawFixture {
  Ring ring;
  bool rational = false;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::optional<int> degree;
  std::vector<std::pair<int, std::string>> components;  // line, text
  std::map<std::string, long long> expects;
  std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>> sections;
};

RawFixture scan_fixture(std::istream& is);

template <class K>
Fixture<K> realize_fixture(const RawFixture& raw, Domain<K> dom) {
  if (raw.components.size() != 4)
    throw ParseError("fixture needs exactly 4 component lines", 1, 1);
  std::array<Polynomial<K>, 4> comps;
  for (int i = 0; i < 4; ++i) {
    const auto& [line, text] = raw.components[static_cast<std::size_t>(i)];
    comps[static_cast<std::size_t>(i)] = parse_polynomial(raw.ring, dom, text, line);
  }
  RationalMap<K> map(raw.ring, std::move(comps), dom,
                     raw.family.empty() ? "fixture" : "fixture " + raw.family);
  if (raw.degree && *raw.degree != map.degree())
    throw ParseError("declared degree does not match the components", 1, 1);

  Fixture<K> fx{dom, std::move(map), raw.seed, raw.family, std::nullopt, {}};
  if (!raw.expects.empty()) {
    ExpectedRow e;
    auto get = [&](const char* k) -> std::optional<long long> {
      auto it = raw.expects.find(k);
      if (it == raw.expects.end()) return std::nullopt;
      return it->second;
    };
    e.d1 = static_cast<int>(get("d1").value_or(fx.map.degree()));
    e.d2 = get("d2");
    e.alpha = get("alpha");
    if (auto b = get("beta")) e.beta = static_cast<int>(*b);
    e.eta = get("eta");
    if (auto g = get("genus")) e.genus = static_cast<int>(*g);
    e.deg_c1 = get("degC1");
    e.deg_c2 = get("degC2");
    fx.expect = e;
  }
  for (const auto& [name, polys] : raw.sections) {
    std::vector<Polynomial<K>> parsed;
    for (const auto& [line, text] : polys)
      parsed.push_back(parse_polynomial(raw.ring, dom, text, line));
    fx.sections[name] = std::move(parsed);
  }
  return fx;
}

}  // namespace detail

AnyFixture load_fixture(std::istream& is);

}  // namespace cremona
