#pragma once

// Verification suites shared by the command line tool and the acceptance tests.
// Every suite is deterministic for a given parameter set.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fsq/json_io.hpp"

namespace fsq {

struct SuiteParams {
  int m = 3;
  int max_degree = 6;
  std::uint64_t seed = 42;
  std::optional<int> power;   ///< fueter: powers 0..power instead of the default range
  std::optional<int> degree;  ///< gck: a single degree instead of 0..max_degree
  int trials = 200;           ///< algebra: random triples per identity
  int prop45_order = -1;      ///< GCK truncation for the Laurent identities (-1: default)
  std::string rule;           ///< sphere rule for the radon suite; empty picks a level by m

  /// Throws DomainError outside m in [1, 6], max_degree in [0, 10], trials in [1, 100000].
  void validate() const;
  io::Json to_json() const;
  /// The parsed rule, or default_sphere_rule(m) when empty.
  SphereRule sphere_rule() const;
};

/// gauss:24 (m <= 3), gauss:16, gauss:10, gauss:7 (m = 4, 5, 6).
SphereRule default_sphere_rule(int m);

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<ReportEntry> entries;
  std::set<std::string> covered;  ///< operations exercised

  bool pass() const { return all_pass(entries); }
};

const std::vector<std::string>& suite_names();

/// Every public operation a full run has to exercise.
const std::vector<std::string>& operation_manifest();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

/// {"schema", "suite", "params", "pass", "cases": [...], "coverage": [...]}.
io::Json report_json(const VerificationReport& r, bool timings = false);

/// One line per case: status, identity, m, k, residual, tolerance.
std::string report_table(const VerificationReport& r);

const std::vector<std::string>& export_kinds();

/// Result of a single-purpose check verb: a JSON document with "schema" and "pass".
struct CheckOutput {
  io::Json json;
  bool pass = false;
};

/// Plane-wave identity R[S[x0^k]] = GCK[x0^k] for k = 0..degree under the given rule,
/// plus the Cauchy kernel check at x0 = +-1 for numeric rules.
CheckOutput radon_check(int m, int degree, const SphereRule& rule);

/// which: "unitarity" (Gram matrix of h_0..h_K), "ua-routes" or "fueter-routes"
/// (h_0..h_K at three fixed points). Residuals are compared with tol.
CheckOutput cst_check(int m, const std::string& which, int family, double tol);

/// tau_m on x^power, or on a Laurent polynomial when one is given. The Laurent form is
/// checked pointwise against the sum of the single-power images.
CheckOutput fueter_check(int m, int power, const std::optional<LaurentPoly>& laurent = std::nullopt);

/// Canonical JSON for Qpoly (m, k), monomialP (m, order k), cauchyE (m) and
/// fueter_power (m, power k).
io::Json export_object(const std::string& kind, int m, int k);

}  // namespace fsq
