#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cremona/analysis.hpp"

namespace cremona {

struct FamilyReport {
  std::string family;
  std::uint64_t seed = 0;
  MapAnalysis analysis;
};

// One run's worth of results. Structured serialization is deterministic and
// integer-valued; wall-clock timings appear in the text rendering only.
struct Report {
  long long prime = 0;  // 0 means the rationals
  std::uint64_t seed = 1;
  std::string tier = "fast";
  std::vector<FamilyReport> table;
  std::vector<CheckResult> dimension_checks;
  std::vector<CheckResult> chow_checks;
  std::vector<CheckResult> deep_checks;

  bool all_pass() const;
  std::vector<std::string> failing_check_ids() const;
};

std::string render_json(const Report& r);
Report parse_report_json(const std::string& text);
void render_text(const Report& r, std::ostream& os,
                 const std::map<std::string, double>& timings_ms = {});

struct TheoremBOptions {
  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  bool full = false;     // include the deep and contraction suites
  bool parallel = true;  // analyze the four families concurrently
};

// Construct one member of each family, analyze all of them against their
// expected rows, and assemble the invariant table report together with the
// dimension-count and intersection-ring sections.
Report run_theorem_b(const TheoremBOptions& opts, std::map<std::string, double>* timings_ms);

std::vector<CheckResult> dimension_checks();
std::vector<CheckResult> chow_checks();

}  // namespace cremona
