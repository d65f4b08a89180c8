#include "cremona/ring.hpp"

#include "cremona/monomial.hpp"

namespace cremona {

Ring::Ring(std::vector<std::string> vars) {
  if (vars.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw StructuralError("ring arity exceeds monomial capacity");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw StructuralError("duplicate variable name " + vars[i]);
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return -1;
}

const Ring& Ring::p3() {
  static const Ring r({"z0", "z1", "z2", "z3"});
  return r;
}

const Ring& Ring::p3_dual() {
  static const Ring r({"y0", "y1", "y2", "y3"});
  return r;
}

const Ring& Ring::plane() {
  static const Ring r({"z0", "z1", "z2"});
  return r;
}

const Ring& Ring::graph() {
  static const Ring r({"z0", "z1", "z2", "z3", "y0", "y1", "y2", "y3"});
  return r;
}

Ring Ring::with_aux_front(const std::string& name) const {
  std::vector<std::string> v;
  v.reserve(vars_->size() + 1);
  v.push_back(name);
  v.insert(v.end(), vars_->begin(), vars_->end());
  return Ring(std::move(v));
}

Ring Ring::suffix(int from) const {
  std::vector<std::string> v(vars_->begin() + from, vars_->end());
  return Ring(std::move(v));
}

std::string Ring::describe() const {
  std::string s;
  for (const auto& v : *vars_) {
    if (!s.empty()) s += ' ';
    s += v;
  }
  return s;
}

}  // namespace cremona
