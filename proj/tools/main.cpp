// Command-line front end for the verification suites.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "amalgam/closure.hpp"
#include "amalgam/generators.hpp"
#include "amalgam/orbits.hpp"
#include "amalgam/suites.hpp"

using namespace amalgam;

namespace {

struct CommonFlags {
  std::string generators;
  std::string json;
  std::string format = "text";
};

Generators load(const CommonFlags& flags) {
  return flags.generators.empty() ? builtin_generators() : load_fixture_file(flags.generators);
}

int emit(const VerificationReport& report, const CommonFlags& flags) {
  write_report(report, flags.format == "json" ? ReportFormat::json : ReportFormat::text, "-");
  if (!flags.json.empty()) write_report(report, ReportFormat::json, flags.json);
  return report.exit_code();
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--generators", flags.generators, "Fixture file with a, b, c, d, f (default: built in)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--json", flags.json, "Also write the JSON report to this path");
  cmd->add_option("--format", flags.format, "Report format on stdout")->check(CLI::IsMember({"text", "json"}));
}

const std::map<std::string, IdealSign> kIdeals{{"plus", IdealSign::plus}, {"minus", IdealSign::minus}};
const std::map<std::string, VerifyLevel> kLevels{{"quick", VerifyLevel::quick}, {"full", VerifyLevel::full}};
const std::map<std::string, ActionDomain> kDomains{{"vectors", ActionDomain::vectors},
                                                   {"projective", ActionDomain::projective}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for a 5-dimensional unitary representation of GL(2,3) *_D8 S4 and its reductions"};
  app.require_subcommand(1);

  CommonFlags common;
  ModOptions mod;
  std::uint64_t max_mem = kDefaultMemoryBudget;
  bool use_target = true;

  auto add_mod_flags = [&](CLI::App* cmd) {
    cmd->add_option("--prime", mod.p, "Odd prime p < 2^20")->required();
    cmd->add_option("--ideal", mod.ideal, "Prime ideal above a split prime")
        ->transform(CLI::CheckedTransformer(kIdeals, CLI::ignore_case));
    cmd->add_option("--seed", mod.seed, "Seed for random elements");
    cmd->add_option("--max-mem", max_mem, "Memory budget for stabilizer chains in bytes");
    cmd->add_option("--domain", mod.chain.domain, "Point domain for stabilizer chains")
        ->transform(CLI::CheckedTransformer(kDomains, CLI::ignore_case));
  };

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* exact = verify->add_subcommand("exact", "Exact checks over Z[1/sqrt(-2)]");
  add_common(exact, common);
  auto* vmod = verify->add_subcommand("mod", "Checks of the reduction modulo a prime ideal");
  add_common(vmod, common);
  add_mod_flags(vmod);
  vmod->add_option("--level", mod.level, "quick or full")->transform(CLI::CheckedTransformer(kLevels, CLI::ignore_case));
  vmod->add_option("--cap", mod.closure_cap, "Cap on finite-field closures");

  auto* orbits = app.add_subcommand("orbits", "Orbit lengths of L_p on projective points");
  add_common(orbits, common);
  add_mod_flags(orbits);

  auto* order = app.add_subcommand("order", "Order of L_p by stabilizer chain");
  add_common(order, common);
  add_mod_flags(order);
  order->add_flag("--target,!--no-target", use_target, "Certify against |SL(5,p)| or |SU(5,p)| for p > 3");

  std::string word = "bc";
  auto* spec = app.add_subcommand("spectrum", "Characteristic polynomial of a word in a, b, c, d, f");
  add_common(spec, common);
  spec->add_option("word", word, "Word such as bc; capitals are inverses");

  std::string input, out = "-";
  auto* report = app.add_subcommand("report", "Re-render a JSON report and return its exit code");
  report->add_option("--input", input, "JSON report written by --json")->required()->check(CLI::ExistingFile);
  report->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--out", out, "Output path, - for stdout");

  std::string fixture_out;
  auto* fixture = app.add_subcommand("fixture", "Write the built-in generators as a fixture file");
  fixture->add_option("--out", fixture_out, "Destination path")->required();

  CLI11_PARSE(app, argc, argv);
  mod.chain.max_memory = max_mem;

  try {
    if (exact->parsed()) return emit(verify_exact(load(common)), common);
    if (vmod->parsed()) return emit(verify_mod(load(common), mod), common);

    if (orbits->parsed()) {
      const ReductionContext ctx = ReductionContext::make(mod.p, mod.ideal);
      const auto gens = reduced_group_generators(load(common), ctx);
      std::cout << ctx.describe() << "\norbit lengths on points:";
      for (auto s : orbit_partition(ctx.field(), column_action(gens))) std::cout << ' ' << s;
      std::cout << "\norbit lengths on hyperplanes:";
      for (auto s : orbit_partition(ctx.field(), gens)) std::cout << ' ' << s;
      std::cout << '\n';
      return 0;
    }

    if (order->parsed()) {
      const ReductionContext ctx = ReductionContext::make(mod.p, mod.ideal);
      ChainOptions chain = mod.chain;
      chain.seed = mod.seed;
      std::optional<GroupOrderTarget> target;
      if (use_target && mod.p > 3) target = theorem_target(ctx);
      try {
        const OrderResult r = matrix_group_order(ctx.field(), reduced_group_generators(load(common), ctx), chain, target);
        std::cout << ctx.describe() << "\norder " << r.order << " (" << to_string(r.status) << ")\n";
        if (target) std::cout << "|" << target->name() << "| = " << target->value << '\n';
        std::cout << "basic orbits:";
        for (auto s : r.orbit_sizes) std::cout << ' ' << s;
        std::cout << "\nscalar kernel: " << r.scalar_kernel << "\nrandom elements: " << r.random_elements
                  << "\nstrong generators: " << r.strong_generators << '\n';
        return target && r.order != target->value ? 1 : 0;
      } catch (const Inconclusive& e) {
        std::cout << e.what() << '\n';
        return 2;
      }
    }

    if (spec->parsed()) {
      const MatrixR m = evaluate_word(load(common), word);
      const Spectrum s = spectrum(m);
      std::cout << "word " << word << "\ncharacteristic polynomial (ascending x,y,k):";
      for (const auto& c : s.poly.coeffs) std::cout << ' ' << c.to_string();
      std::cout << "\norder: " << (s.order ? std::to_string(*s.order) : std::string("> 64"))
                << "\nself-reciprocal: " << (s.self_reciprocal ? "yes" : "no") << '\n';
      return 0;
    }

    if (report->parsed()) {
      std::ifstream in(input);
      const VerificationReport r = VerificationReport::from_json(nlohmann::json::parse(in));
      return write_report(r, common.format == "json" ? ReportFormat::json : ReportFormat::text, out);
    }

    if (fixture->parsed()) {
      save_fixture_file(builtin_generators(), fixture_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
