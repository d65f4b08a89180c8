#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cremona/deepchecks.hpp"
#include "cremona/fixture.hpp"
#include "cremona/report.hpp"

namespace {

using namespace cremona;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw StructuralError("cannot open output file " + path);
  return file;
}

int cmd_construct(const std::string& family, int d, std::uint32_t prime, std::uint64_t seed,
                  const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_output(out, file);
  if (family == "loria") {
    FamilyMember<Rat> member = make_loria();
    write_fixture(os, member, seed);
    return 0;
  }
  Domain<Fp> dom(prime);
  SeedStream rng(seed, static_cast<std::uint64_t>(family[0]));
  FamilyMember<Fp> member = [&] {
    if (family == "J") return make_jonquieres(dom, d, rng);
    if (family == "R") return make_ruled(dom, d, rng);
    if (family == "D") {
      if (d != 4) throw StructuralError("the determinantal family is quartic; use --d 4");
      return make_determinantal(dom, rng);
    }
    if (family == "C") {
      if (d != 4) throw StructuralError("the double-conic family is quartic; use --d 4");
      return make_conic(dom, rng);
    }
    throw StructuralError("unknown family " + family);
  }();
  write_fixture(os, member, seed);
  return 0;
}

template <class K>
Report analyze_fixture(const Fixture<K>& fx, std::uint64_t seed, bool full,
                       std::map<std::string, double>& timings) {
  Report r;
  r.prime = 0;
  if constexpr (std::is_same_v<K, Fp>) r.prime = fx.dom.p;
  r.seed = seed;
  r.tier = full ? "full" : "fast";

  FamilyReport row;
  row.family = fx.family.empty() ? "map" : fx.family;
  row.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  row.analysis = analyze(fx.map, seed, fx.expect);
  timings["analyze"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.table.push_back(row);

  if (full && fx.sections.count("inverse") && fx.sections.count("delta") &&
      fx.sections.count("gamma")) {
    FamilyMember<K> member{fx.map,
                           RationalMap<K>(fx.map.ring(),
                                          {fx.sections.at("inverse")[0], fx.sections.at("inverse")[1],
                                           fx.sections.at("inverse")[2], fx.sections.at("inverse")[3]},
                                          fx.dom, "fixture inverse"),
                           Ideal<K>(fx.map.ring(), fx.sections.at("delta")),
                           Ideal<K>(fx.map.ring(), fx.sections.at("gamma")),
                           fx.expect.value_or(ExpectedRow{}),
                           fx.family};
    auto t1 = std::chrono::steady_clock::now();
    r.deep_checks = deep_determinantal_checks(member);
    auto contraction = contraction_checks(member);
    r.deep_checks.insert(r.deep_checks.end(), contraction.begin(), contraction.end());
    timings["deep"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1).count();
  }
  return r;
}

int emit_report(const Report& r, const std::string& format, const std::string& out,
                const std::map<std::string, double>& timings) {
  std::ofstream file;
  std::ostream& os = open_output(out, file);
  if (format == "structured")
    os << render_json(r);
  else
    render_text(r, os, timings);
  return r.all_pass() ? 0 : 1;
}

int cmd_analyze(const std::string& path, std::optional<std::uint64_t> seed_override, bool full,
                const std::string& format, const std::string& out) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open fixture " + path);
  AnyFixture fx = load_fixture(in);
  std::map<std::string, double> timings;
  Report r = std::visit(
      [&](const auto& f) {
        std::uint64_t seed = seed_override.value_or(f.seed ? f.seed : 1);
        return analyze_fixture(f, seed, full, timings);
      },
      fx);
  return emit_report(r, format, out, timings);
}

int cmd_theorem_b(std::uint32_t prime, std::uint64_t seed, bool full, bool serial,
                  const std::string& format, const std::string& out) {
  TheoremBOptions opts;
  opts.prime = prime;
  opts.seed = seed;
  opts.full = full;
  opts.parallel = !serial;
  std::map<std::string, double> timings;
  Report r = run_theorem_b(opts, &timings);
  return emit_report(r, format, out, timings);
}

int cmd_chow(const std::string& format, const std::string& out) {
  Report r;
  r.prime = 0;
  r.seed = 0;
  r.tier = "fast";
  r.chow_checks = chow_checks();
  return emit_report(r, format, out, {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of quarto-quartic birational maps of P3"};
  app.require_subcommand(1);

  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  std::string family = "D";
  int d = 4;
  std::string tier = "fast";
  std::string out;
  std::string format = "text";
  std::size_t budget = 200000;
  bool serial = false;
  std::string fixture_path;
  bool seed_set = false;

  app.add_option("--gb-budget", budget, "reduction budget per basis computation");

  auto* construct = app.add_subcommand("construct", "construct a family member fixture");
  construct->add_option("--family", family, "J, R, D, C or loria")->required();
  construct->add_option("--d", d, "degree for the J and R families");
  construct->add_option("--prime", prime, "prime field modulus");
  construct->add_option("--seed", seed, "random seed");
  construct->add_option("--out", out, "output path (default stdout)");

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a fixture file");
  analyze_cmd->add_option("fixture", fixture_path, "fixture path")->required();
  analyze_cmd->add_option("--seed", seed, "override the fixture seed")
      ->each([&](const std::string&) { seed_set = true; });
  analyze_cmd->add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  analyze_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze_cmd->add_option("--out", out, "output path (default stdout)");

  auto* theoremb = app.add_subcommand("theoremB", "construct and check all four families");
  theoremb->add_option("--prime", prime, "prime field modulus");
  theoremb->add_option("--seed", seed, "random seed");
  theoremb->add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  theoremb->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  theoremb->add_option("--out", out, "output path (default stdout)");
  theoremb->add_flag("--serial", serial, "analyze families one at a time");

  auto* chow = app.add_subcommand("chow", "run the intersection-ring checks");
  chow->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  chow->add_option("--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  cremona::gb_reduction_budget().store(budget);

  try {
    if (construct->parsed()) return cmd_construct(family, d, prime, seed, out);
    if (analyze_cmd->parsed())
      return cmd_analyze(fixture_path,
                         seed_set ? std::optional<std::uint64_t>(seed) : std::nullopt,
                         tier == "full", format, out);
    if (theoremb->parsed()) return cmd_theorem_b(prime, seed, tier == "full", serial, format, out);
    if (chow->parsed()) return cmd_chow(format, out);
  } catch (const cremona::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
