#include "cremona/fixture.hpp"

namespace cremona {

namespace detail {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

RawFixture scan_fixture(std::istream& is) {
  RawFixture raw;
  bool have_ring = false, have_field = false;
  std::string line;
  int lineno = 0;
  std::string open_section;
  while (std::getline(is, line)) {
    ++lineno;
    std::string trimmed = line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    std::size_t start = 0;
    while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
      ++start;
    trimmed = trimmed.substr(start);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    if (!open_section.empty()) {
      if (trimmed == "end") {
        open_section.clear();
      } else {
        raw.sections.back().second.emplace_back(lineno, trimmed);
      }
      continue;
    }

    auto words = split_ws(trimmed);
    const std::string& key = words[0];
    if (key == "ring") {
      raw.ring = Ring(std::vector<std::string>(words.begin() + 1, words.end()));
      have_ring = true;
    } else if (key == "field") {
      if (words.size() >= 3 && words[1] == "prime") {
        raw.prime = static_cast<std::uint32_t>(std::stoul(words[2]));
      } else if (words.size() >= 2 && words[1] == "rationals") {
        raw.rational = true;
      } else {
        throw ParseError("field must be 'prime <p>' or 'rationals'", lineno, 1);
      }
      have_field = true;
    } else if (key == "seed") {
      if (words.size() < 2) throw ParseError("seed needs a value", lineno, 1);
      raw.seed = std::stoull(words[1]);
    } else if (key == "family") {
      if (words.size() < 2) throw ParseError("family needs a value", lineno, 1);
      raw.family = words[1];
    } else if (key == "degree") {
      if (words.size() < 2) throw ParseError("degree needs a value", lineno, 1);
      raw.degree = std::stoi(words[1]);
    } else if (key == "component") {
      if (!have_ring) throw ParseError("component before ring", lineno, 1);
      raw.components.emplace_back(lineno, trimmed.substr(key.size()));
    } else if (key == "expect") {
      if (words.size() < 3) throw ParseError("expect needs a name and a value", lineno, 1);
      raw.expects[words[1]] = std::stoll(words[2]);
    } else if (key == "section") {
      if (words.size() < 2) throw ParseError("section needs a name", lineno, 1);
      open_section = words[1];
      raw.sections.emplace_back(open_section, std::vector<std::pair<int, std::string>>{});
    } else {
      throw ParseError("unknown fixture keyword '" + key + "'", lineno, 1);
    }
  }
  if (!open_section.empty()) throw ParseError("unterminated section " + open_section, lineno, 1);
  if (!have_ring) throw ParseError("fixture is missing its ring line", lineno, 1);
  if (!have_field) throw ParseError("fixture is missing its field line", lineno, 1);
  return raw;
}

}  // namespace detail

AnyFixture load_fixture(std::istream& is) {
  detail::RawFixture raw = detail::scan_fixture(is);
  if (raw.rational) return detail::realize_fixture<Rat>(raw, Domain<Rat>{});
  return detail::realize_fixture<Fp>(raw, Domain<Fp>(raw.prime));
}

}  // namespace cremona
