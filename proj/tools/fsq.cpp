// Command line front end for the verification suites and JSON exports.
//
//   fsq verify <suite> [--m M] [--max-degree D] [--seed S] [--power L] [--degree K]
//                      [--rule R] [--trials T] [--prop45-order N] [--out FILE] [--json] [--timings]
//   fsq export <kind> --m M [--k K] [--out FILE]
//   fsq fueter --m M --power L [--laurent FILE] [--out FILE]
//   fsq radon-check --m M --degree K [--rule exact|gauss:L|mc:N:SEED] [--out FILE]
//   fsq cst-check --m M --which unitarity|ua-routes|fueter-routes [--family hermite:K] [--tol T] [--out FILE]
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on usage errors and
// 3 on runtime errors. FSQ_OUTPUT_DIR names a directory for JSON output when --out is
// not given.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "fsq/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

/// --out wins; otherwise $FSQ_OUTPUT_DIR/<default_name>; otherwise no file.
std::optional<std::string> output_path(const std::string& out, const std::string& default_name) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("FSQ_OUTPUT_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / default_name).string();
  return std::nullopt;
}

/// Writes the JSON to the resolved path, or to stdout when there is none (or when
/// echo is set).
void emit(const fsq::io::Json& doc, const std::string& out, const std::string& default_name, bool echo) {
  const std::string text = fsq::io::dump(doc);
  const auto path = output_path(out, default_name);
  if (path) fsq::io::write_file(*path, text);
  if (!path || echo) std::cout << text;
}

int parse_family(const std::string& family) {
  const std::string prefix = "hermite:";
  if (family.rfind(prefix, 0) != 0) throw CLI::ValidationError("--family", "expected hermite:K");
  try {
    std::size_t used = 0;
    const int k = std::stoi(family.substr(prefix.size()), &used);
    if (used != family.size() - prefix.size()) throw std::invalid_argument("trailing characters");
    return k;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--family", "expected hermite:K with an integer K");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford analysis verification tool"};
  app.require_subcommand(1);

  fsq::SuiteParams params;
  std::string suite, out;
  std::optional<int> power, degree;
  bool as_json = false, timings = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "algebra, gck, fueter, prop45, radon, cst or all")
      ->required()
      ->check(CLI::IsMember(fsq::suite_names()));
  verify->add_option("--m", params.m, "Clifford dimension (1..6)");
  verify->add_option("--max-degree", params.max_degree, "largest degree (0..10)");
  verify->add_option("--seed", params.seed, "random seed");
  verify->add_option("--power", power, "fueter: powers 0..L");
  verify->add_option("--degree", degree, "gck: a single degree");
  verify->add_option("--rule", params.rule, "radon: exact, gauss:L or mc:N:SEED");
  verify->add_option("--trials", params.trials, "algebra: random trials per identity");
  verify->add_option("--prop45-order", params.prop45_order, "GCK truncation for the Laurent identities");
  verify->add_option("--out", out, "JSON report path");
  verify->add_flag("--json", as_json, "print the JSON report instead of the table");
  verify->add_flag("--timings", timings, "include elapsed_ms per case (not byte stable)");

  std::string kind;
  int export_m = 3, export_k = 0;
  auto* exp = app.add_subcommand("export", "write a canonical JSON object");
  exp->add_option("kind", kind, "Qpoly, monomialP, cauchyE or fueter_power")
      ->required()
      ->check(CLI::IsMember(fsq::export_kinds()));
  exp->add_option("--m", export_m, "Clifford dimension");
  exp->add_option("--k", export_k, "degree, order or power");
  exp->add_option("--out", out, "output path");

  int fueter_m = 3, fueter_power = 0;
  std::string laurent_file;
  auto* fueter = app.add_subcommand("fueter", "apply tau_m to x^L or to a Laurent polynomial");
  fueter->add_option("--m", fueter_m, "Clifford dimension")->required();
  auto* power_opt = fueter->add_option("--power", fueter_power, "exponent L");
  fueter->add_option("--laurent", laurent_file, "JSON Laurent polynomial {\"terms\": [{\"n\", \"coeff\"}]}")
      ->check(CLI::ExistingFile);
  fueter->add_option("--out", out, "output path");

  int radon_m = 3, radon_degree = 4;
  std::string radon_rule = "exact";
  auto* radon = app.add_subcommand("radon-check", "plane-wave identities under a sphere rule");
  radon->add_option("--m", radon_m, "Clifford dimension")->required();
  radon->add_option("--degree", radon_degree, "largest degree")->required();
  radon->add_option("--rule", radon_rule, "exact, gauss:L or mc:N:SEED");
  radon->add_option("--out", out, "output path");

  int cst_m = 3;
  std::string which, family = "hermite:3";
  double tol = 1e-7;
  auto* cst = app.add_subcommand("cst-check", "coherent state transform route and unitarity checks");
  cst->add_option("--m", cst_m, "Clifford dimension")->required();
  cst->add_option("--which", which, "unitarity, ua-routes or fueter-routes")
      ->required()
      ->check(CLI::IsMember({"unitarity", "ua-routes", "fueter-routes"}));
  cst->add_option("--family", family, "hermite:K uses h_0..h_K");
  cst->add_option("--tol", tol, "residual tolerance");
  cst->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    bool pass = false;
    if (*verify) {
      params.power = power;
      params.degree = degree;
      const fsq::VerificationReport report = fsq::run_suite(suite, params);
      const fsq::io::Json doc = fsq::report_json(report, timings);
      const auto path = output_path(out, "verify-" + suite + ".json");
      if (path) fsq::io::write_file(*path, fsq::io::dump(doc));
      if (as_json)
        std::cout << fsq::io::dump(doc);
      else
        std::cout << fsq::report_table(report);
      pass = report.pass();
    } else if (*exp) {
      emit(fsq::export_object(kind, export_m, export_k), out,
           kind + "-m" + std::to_string(export_m) + "-k" + std::to_string(export_k) + ".json", false);
      pass = true;
    } else if (*fueter) {
      std::optional<fsq::LaurentPoly> laurent;
      if (!laurent_file.empty())
        laurent = fsq::io::laurent_from_json(fsq::io::Json::parse(fsq::io::read_file(laurent_file)));
      else if (power_opt->count() == 0)
        throw CLI::RequiredError("--power or --laurent");
      const fsq::CheckOutput r = fsq::fueter_check(fueter_m, fueter_power, laurent);
      emit(r.json, out, "fueter-m" + std::to_string(fueter_m) + ".json", true);
      pass = r.pass;
    } else if (*radon) {
      const fsq::CheckOutput r = fsq::radon_check(radon_m, radon_degree, fsq::SphereRule::parse(radon_rule));
      emit(r.json, out, "radon-check-m" + std::to_string(radon_m) + ".json", true);
      pass = r.pass;
    } else if (*cst) {
      const fsq::CheckOutput r = fsq::cst_check(cst_m, which, parse_family(family), tol);
      emit(r.json, out, "cst-check-" + which + "-m" + std::to_string(cst_m) + ".json", true);
      pass = r.pass;
    }
    return pass ? 0 : kExitFail;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fsq::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
