#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

// Ordered list of variable names. Rings are values; copies share storage.
// Variable order matters: elimination always removes a prefix.
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> vars);

  int arity() const { return static_cast<int>(vars_->size()); }
  const std::string& var(int i) const { return (*vars_)[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& vars() const { return *vars_; }
  int index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  // (z0,z1,z2,z3): coordinates of the source projective space.
  static const Ring& p3();
  // (y0,y1,y2,y3): coordinates of the target projective space.
  static const Ring& p3_dual();
  // (z0,z1,z2): a plane section.
  static const Ring& plane();
  // (z0..z3,y0..y3): the ring carrying graph ideals; z comes first so that the
  // source coordinates form the elimination block.
  static const Ring& graph();

  // Same ring with one auxiliary variable prepended (used by the
  // intersection trick; the auxiliary always sits in the elimination block).
  Ring with_aux_front(const std::string& name = "t") const;
  // Variables from index `from` on.
  Ring suffix(int from) const;

  std::string describe() const;

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace cremona
