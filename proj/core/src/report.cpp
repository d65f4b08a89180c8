#include "cremona/report.hpp"

#include <chrono>
#include <future>
#include <iomanip>

#include "json.hpp"

#include "cremona/chow.hpp"
#include "cremona/deepchecks.hpp"
#include "cremona/families.hpp"

namespace cremona {

using nlohmann::json;

bool Report::all_pass() const { return failing_check_ids().empty(); }

std::vector<std::string> Report::failing_check_ids() const {
  std::vector<std::string> out;
  auto scan = [&out](const std::vector<CheckResult>& checks, const std::string& prefix) {
    for (const auto& c : checks)
      if (!c.pass) out.push_back(prefix + c.id);
  };
  for (const auto& row : table) scan(row.analysis.checks, row.family + ".");
  scan(dimension_checks, "dimension.");
  scan(chow_checks, "chow.");
  scan(deep_checks, "deep.");
  return out;
}

namespace {

json check_to_json(const CheckResult& c) {
  json j;
  j["id"] = c.id;
  j["pass"] = c.pass;
  if (c.expected) j["expected"] = *c.expected;
  if (c.got) j["got"] = *c.got;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

CheckResult check_from_json(const json& j) {
  CheckResult c;
  c.id = j.at("id").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  if (j.contains("expected")) c.expected = j.at("expected").get<long long>();
  if (j.contains("got")) c.got = j.at("got").get<long long>();
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(check_to_json(c));
  return arr;
}

std::vector<CheckResult> checks_from_json(const json& arr) {
  std::vector<CheckResult> out;
  for (const auto& j : arr) out.push_back(check_from_json(j));
  return out;
}

json analysis_to_json(const MapAnalysis& a) {
  json j;
  j["d1"] = a.d1;
  if (a.d2) j["d2"] = *a.d2;
  j["birational"] = a.birational;
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  if (a.eta) j["eta"] = *a.eta;
  if (a.deg_c1) j["degC1"] = *a.deg_c1;
  if (a.deg_c2) j["degC2"] = *a.deg_c2;
  if (a.genus_value) j["genus"] = *a.genus_value;
  if (!a.genus_error.empty()) j["genusError"] = a.genus_error;
  j["checks"] = checks_to_json(a.checks);
  return j;
}

MapAnalysis analysis_from_json(const json& j) {
  MapAnalysis a;
  a.d1 = j.at("d1").get<int>();
  if (j.contains("d2")) a.d2 = j.at("d2").get<long long>();
  a.birational = j.at("birational").get<bool>();
  a.alpha = j.at("alpha").get<long long>();
  a.beta = j.at("beta").get<int>();
  if (j.contains("eta")) a.eta = j.at("eta").get<long long>();
  if (j.contains("degC1")) a.deg_c1 = j.at("degC1").get<long long>();
  if (j.contains("degC2")) a.deg_c2 = j.at("degC2").get<long long>();
  if (j.contains("genus")) a.genus_value = j.at("genus").get<int>();
  if (j.contains("genusError")) a.genus_error = j.at("genusError").get<std::string>();
  a.checks = checks_from_json(j.at("checks"));
  return a;
}

}  // namespace

std::string render_json(const Report& r) {
  json j;
  j["provenance"]["prime"] = r.prime;
  j["provenance"]["seed"] = r.seed;
  j["provenance"]["tier"] = r.tier;
  json table = json::array();
  for (const auto& row : r.table) {
    json jr;
    jr["family"] = row.family;
    jr["seed"] = row.seed;
    jr["analysis"] = analysis_to_json(row.analysis);
    table.push_back(jr);
  }
  j["table"] = table;
  j["dimension"] = checks_to_json(r.dimension_checks);
  j["chow"] = checks_to_json(r.chow_checks);
  j["deep"] = checks_to_json(r.deep_checks);
  j["pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.prime = j.at("provenance").at("prime").get<long long>();
  r.seed = j.at("provenance").at("seed").get<std::uint64_t>();
  r.tier = j.at("provenance").at("tier").get<std::string>();
  for (const auto& jr : j.at("table")) {
    FamilyReport row;
    row.family = jr.at("family").get<std::string>();
    row.seed = jr.at("seed").get<std::uint64_t>();
    row.analysis = analysis_from_json(jr.at("analysis"));
    r.table.push_back(row);
  }
  r.dimension_checks = checks_from_json(j.at("dimension"));
  r.chow_checks = checks_from_json(j.at("chow"));
  r.deep_checks = checks_from_json(j.at("deep"));
  return r;
}

namespace {

std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

void render_checks(std::ostream& os, const std::vector<CheckResult>& checks,
                   const std::string& prefix) {
  for (const auto& c : checks) {
    os << (c.pass ? "  [PASS] " : "  [FAIL] ") << prefix << c.id;
    if (c.expected) os << " expected " << *c.expected;
    if (c.got)
      os << " got " << *c.got;
    else if (c.expected)
      os << " got -";
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
}

}  // namespace

void render_text(const Report& r, std::ostream& os,
                 const std::map<std::string, double>& timings_ms) {
  os << "field: ";
  if (r.prime)
    os << "F_" << r.prime;
  else
    os << "Q";
  os << "  seed: " << r.seed << "  tier: " << r.tier << "\n\n";
  if (!r.table.empty()) {
    os << "family  bidegree  alpha  beta  eta  genus  degC1  degC2\n";
    for (const auto& row : r.table) {
      const MapAnalysis& a = row.analysis;
      std::string bideg = "(" + std::to_string(a.d1) + "," + (a.d2 ? std::to_string(*a.d2) : "-") + ")";
      std::string genus = a.genus_value ? std::to_string(*a.genus_value)
                                        : (a.genus_error.empty() ? "-" : "!");
      os << std::left << std::setw(8) << row.family << std::setw(10) << bideg << std::setw(7)
         << a.alpha << std::setw(6) << a.beta << std::setw(5) << opt_str(a.eta) << std::setw(7)
         << genus << std::setw(7) << opt_str(a.deg_c1) << opt_str(a.deg_c2) << "\n";
    }
    os << "\n";
    for (const auto& row : r.table) render_checks(os, row.analysis.checks, row.family + ".");
  }
  if (!r.dimension_checks.empty()) {
    os << "\ndimension counts\n";
    render_checks(os, r.dimension_checks, "");
  }
  if (!r.chow_checks.empty()) {
    os << "\nintersection ring\n";
    render_checks(os, r.chow_checks, "");
  }
  if (!r.deep_checks.empty()) {
    os << "\ndeep suite\n";
    render_checks(os, r.deep_checks, "");
  }
  if (!timings_ms.empty()) {
    os << "\ntimings\n";
    for (const auto& [label, ms] : timings_ms)
      os << "  " << std::left << std::setw(24) << label << std::fixed << std::setprecision(1)
         << ms << " ms\n";
  }
  os << "\noverall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& id : r.failing_check_ids()) os << "failing: " << id << "\n";
}

std::vector<CheckResult> dimension_checks() {
  std::vector<CheckResult> checks;
  detail::add_check(checks, "R", 37, dimension_formula('R', 4));
  detail::add_check(checks, "C", 37, dimension_formula('C', 4));
  detail::add_check(checks, "D", 46, dimension_formula('D', 4));
  detail::add_check(checks, "J", 54, dimension_formula('J', 4));
  for (int d = 2; d <= 8; ++d) {
    detail::add_check(checks, "identity.J.d" + std::to_string(d), 1,
                      dimension_identity_holds('J', d) ? 1 : 0);
    detail::add_check(checks, "identity.R.d" + std::to_string(d), 1,
                      dimension_identity_holds('R', d) ? 1 : 0);
  }
  detail::add_check(checks, "identity.D", 1, dimension_identity_holds('D', 4) ? 1 : 0);
  detail::add_check(checks, "identity.C", 1, dimension_identity_holds('C', 4) ? 1 : 0);
  return checks;
}

std::vector<CheckResult> chow_checks() {
  std::vector<CheckResult> checks;
  ChowClass X = x_class();
  detail::add_check(checks, "X.H3", 1, (X * (ChowClass::h() * ChowClass::h() * ChowClass::h())).top());
  detail::add_check(checks, "X.Hprime3", 1,
                    (X * (ChowClass::hprime() * ChowClass::hprime() * ChowClass::hprime())).top());
  ChowClass expected_gamma =
      (ChowClass::s() * ChowClass::h()).scaled(5) + (ChowClass::h() * ChowClass::h()).scaled(3);
  detail::add_check(checks, "curve.class", 1, gamma_class() == expected_gamma ? 1 : 0);
  detail::add_check(checks, "curve.pair.H", 8, gamma_pair_h());
  detail::add_check(checks, "curve.pair.s", 3, gamma_pair_s());
  for (int d = 2; d <= 8; ++d)
    detail::add_check(checks, "ruled.degree.d" + std::to_string(d), d, ruled_degree(d));
  return checks;
}

Report run_theorem_b(const TheoremBOptions& opts, std::map<std::string, double>* timings_ms) {
  Report r;
  r.prime = opts.prime;
  r.seed = opts.seed;
  r.tier = opts.full ? "full" : "fast";
  Domain<Fp> dom(opts.prime);

  const char families[4] = {'R', 'C', 'D', 'J'};
  auto run_family = [&](char f) -> std::pair<FamilyReport, std::optional<FamilyMember<Fp>>> {
    SeedStream rng(opts.seed, static_cast<std::uint64_t>(f));
    FamilyMember<Fp> member = [&] {
      switch (f) {
        case 'R':
          return make_ruled(dom, 4, rng);
        case 'C':
          return make_conic(dom, rng);
        case 'D':
          return make_determinantal(dom, rng);
        default:
          return make_jonquieres(dom, 4, rng);
      }
    }();
    FamilyReport row;
    row.family = std::string(1, f);
    row.seed = opts.seed;
    row.analysis = analyze(member.map, opts.seed, member.expected);
    return {row, f == 'D' ? std::optional<FamilyMember<Fp>>(member) : std::nullopt};
  };

  std::optional<FamilyMember<Fp>> det_member;
  auto clock = [] { return std::chrono::steady_clock::now(); };
  auto note_time = [&](const std::string& label, auto t0) {
    if (timings_ms)
      (*timings_ms)[label] =
          std::chrono::duration<double, std::milli>(clock() - t0).count();
  };

  if (opts.parallel) {
    std::vector<std::future<std::pair<FamilyReport, std::optional<FamilyMember<Fp>>>>> futs;
    auto t0 = clock();
    for (char f : families)
      futs.push_back(std::async(std::launch::async, run_family, f));
    for (auto& fut : futs) {
      auto [row, member] = fut.get();
      if (member) det_member = member;
      r.table.push_back(std::move(row));
    }
    note_time("table", t0);
  } else {
    for (char f : families) {
      auto t0 = clock();
      auto [row, member] = run_family(f);
      if (member) det_member = member;
      r.table.push_back(std::move(row));
      note_time(std::string("family.") + f, t0);
    }
  }

  r.dimension_checks = dimension_checks();
  r.chow_checks = chow_checks();

  if (opts.full && det_member) {
    auto t0 = clock();
    r.deep_checks = deep_determinantal_checks(*det_member);
    note_time("deep", t0);
    auto t1 = clock();
    auto contraction = contraction_checks(*det_member);
    r.deep_checks.insert(r.deep_checks.end(), contraction.begin(), contraction.end());
    note_time("contraction", t1);
  }
  return r;
}

}  // namespace cremona
