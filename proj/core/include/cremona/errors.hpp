#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

// Structural misuse: mismatched rings, non-square matrices, bad arguments.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// A basis computation hit the configured reduction budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t reductions)
      : std::runtime_error(what + " (after " + std::to_string(reductions) + " reductions)"),
        reductions(reductions) {}
  std::size_t reductions;
};

// One random draw failed an open-condition certificate; callers retry.
class DegenerateDraw : public std::runtime_error {
 public:
  explicit DegenerateDraw(const std::string& condition)
      : std::runtime_error("degenerate draw: " + condition), condition(condition) {}
  std::string condition;
};

// Too many degenerate draws in a row; carries the violated condition name.
class RetriesExhausted : public std::runtime_error {
 public:
  RetriesExhausted(const std::string& condition, int attempts)
      : std::runtime_error("condition failed after " + std::to_string(attempts) +
                           " attempts: " + condition),
        condition(condition),
        attempts(attempts) {}
  std::string condition;
  int attempts;
};

// Text that does not match the polynomial / fixture grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace cremona
