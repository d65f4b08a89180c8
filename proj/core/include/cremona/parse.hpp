#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "cremona/domain.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

// Fixture text grammar, shared by every tool and test in the project:
//   poly    := [sign] term { sign term }
//   term    := integer [ '*' factors ] | factors
//   factors := factor { '*' factor }
//   factor  := variable [ '^' integer ]
// Variable names come from the ring; whitespace is insignificant.
// Example: -z1^2+z0*z3

namespace detail {

inline std::pair<bool, std::string> coeff_signed_magnitude(const Fp& c) {
  long long s = c.symmetric();
  return {s < 0, std::to_string(s < 0 ? -s : s)};
}

inline std::pair<bool, std::string> coeff_signed_magnitude(const Rat& c) {
  if (!c.is_integer())
    throw StructuralError("coefficient " + c.to_string() + " is not representable in the grammar");
  mpz_class n = c.numerator();
  bool neg = n < 0;
  if (neg) n = -n;
  return {neg, n.get_str()};
}

}  // namespace detail

template <class K>
std::string to_grammar_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.terms().size(); ++k) {
    const auto& t = f.terms()[k];
    auto [neg, mag] = detail::coeff_signed_magnitude(t.coeff);
    if (neg)
      out += '-';
    else if (k > 0)
      out += '+';
    bool coeff_is_one = (mag == "1");
    bool wrote_factor = false;
    if (!coeff_is_one || t.mono.is_one()) {
      out += mag;
      wrote_factor = true;
    }
    for (int i = 0; i < f.ring().arity(); ++i) {
      unsigned e = t.mono.exp(i);
      if (e == 0) continue;
      if (wrote_factor) out += '*';
      out += f.ring().var(i);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
      wrote_factor = true;
    }
  }
  return out;
}

template <class K>
class PolynomialParser {
 public:
  PolynomialParser(const Ring& ring, const Domain<K>& dom, std::string_view text, int line = 1)
      : ring_(ring), dom_(dom), text_(text), line_(line) {}

  Polynomial<K> parse() {
    std::vector<Term<K>> terms;
    skip_ws();
    if (done()) fail("empty polynomial");
    bool neg = eat_sign(false);
    parse_term(terms, neg);
    while (true) {
      skip_ws();
      if (done()) break;
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        parse_term(terms, c == '-');
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return Polynomial<K>(ring_, std::move(terms));
  }

 private:
  void parse_term(std::vector<Term<K>>& terms, bool neg) {
    skip_ws();
    if (done()) fail("expected a term");
    K coeff = dom_.one();
    Monomial mono = Monomial::one(ring_.arity());
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer_coeff();
      have_any = true;
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        parse_factors(mono);
      }
    } else {
      parse_factors(mono);
      have_any = true;
    }
    if (!have_any) fail("expected a term");
    if (neg) coeff = -coeff;
    terms.push_back({mono, coeff});
  }

  void parse_factors(Monomial& mono) {
    while (true) {
      skip_ws();
      if (done() || !std::isalpha(static_cast<unsigned char>(peek())))
        fail("expected a variable name");
      std::size_t start = pos_;
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_.index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      unsigned e = 1;
      skip_ws();
      if (!done() && peek() == '^') {
        ++pos_;
        e = static_cast<unsigned>(parse_uint());
      }
      mono.set_exp(idx, static_cast<std::uint16_t>(mono.exp(idx) + e));
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
  }

  K parse_integer_coeff() {
    // Digits accumulate through the domain so arbitrarily large literals work.
    K acc = dom_.zero();
    const K ten = dom_.from_int(10);
    bool any = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      acc = acc * ten + dom_.from_int(peek() - '0');
      ++pos_;
      any = true;
    }
    if (!any) fail("expected an integer");
    return acc;
  }

  unsigned long parse_uint() {
    skip_ws();
    unsigned long v = 0;
    bool any = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 60000) fail("exponent too large");
      ++pos_;
      any = true;
    }
    if (!any) fail("expected an integer");
    return v;
  }

  bool eat_sign(bool required) {
    skip_ws();
    if (!done() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    if (required) fail("expected sign");
    return false;
  }

  char peek() const { return text_[pos_]; }
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  const Ring& ring_;
  const Domain<K>& dom_;
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

template <class K>
Polynomial<K> parse_polynomial(const Ring& ring, const Domain<K>& dom, std::string_view text,
                               int line = 1) {
  return PolynomialParser<K>(ring, dom, text, line).parse();
}

}  // namespace cremona
