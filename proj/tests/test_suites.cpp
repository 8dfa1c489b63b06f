#include <gtest/gtest.h>

#include <algorithm>

#include "fsq/suites.hpp"

namespace fsq {
namespace {

SuiteParams small(int m) {
  SuiteParams p;
  p.m = m;
  p.max_degree = 4;
  p.trials = 20;
  return p;
}

class SuitePerDimension : public ::testing::TestWithParam<int> {};

TEST_P(SuitePerDimension, EverySuitePasses) {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    const VerificationReport r = run_suite(name, small(GetParam()));
    EXPECT_FALSE(r.entries.empty()) << name;
    for (const ReportEntry& e : r.entries)
      EXPECT_TRUE(e.pass()) << name << ": " << e.identity << " m=" << e.m << " k=" << e.k << " residual=" << e.residual;
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, SuitePerDimension, ::testing::Values(1, 2, 3, 4));

TEST(Suites, AllCoversTheManifest) {
  const VerificationReport r = run_suite("all", small(2));
  EXPECT_TRUE(r.pass());
  for (const std::string& op : operation_manifest()) EXPECT_TRUE(r.covered.count(op)) << op;
  EXPECT_EQ(r.entries.back().identity, "all.coverage");
}

TEST(Suites, ReportsAreDeterministic) {
  const SuiteParams p = small(3);
  const std::string a = io::dump(report_json(run_suite("algebra", p)));
  const std::string b = io::dump(report_json(run_suite("algebra", p)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(io::dump(report_json(run_suite("algebra", p), true)).find("elapsed_ms"), std::string::npos);
  SuiteParams q = p;
  q.seed = 43;
  EXPECT_NE(io::dump(report_json(run_suite("radon", p))), io::dump(report_json(run_suite("radon", q))));
}

TEST(Suites, FueterPowerOptionSelectsRange) {
  SuiteParams p = small(2);
  p.power = 1;
  const VerificationReport r = run_suite("fueter", p);
  std::vector<std::string> branches;
  for (const ReportEntry& e : r.entries)
    if (e.identity.rfind("fueter.branch.", 0) == 0) branches.push_back(e.identity + "@" + std::to_string(e.k));
  EXPECT_EQ(branches, (std::vector<std::string>{"fueter.branch.kernel@0", "fueter.branch.positive@1"}));
}

TEST(Suites, GckDegreeOptionSelectsOneDegree) {
  SuiteParams p = small(4);
  p.degree = 0;
  const VerificationReport r = run_suite("gck", p);
  EXPECT_TRUE(r.pass());
  for (const ReportEntry& e : r.entries)
    if (e.identity != "gck.laurent_dirac") EXPECT_EQ(e.k, 0) << e.identity;
}

TEST(Suites, ParameterValidation) {
  SuiteParams p;
  p.m = 7;
  EXPECT_THROW(run_suite("algebra", p), DomainError);
  p = SuiteParams{};
  p.max_degree = 11;
  EXPECT_THROW(run_suite("gck", p), DomainError);
  p = SuiteParams{};
  p.rule = "gauss";
  EXPECT_ANY_THROW(run_suite("radon", p));
  EXPECT_THROW(run_suite("bogus", SuiteParams{}), std::invalid_argument);
}

TEST(Suites, DefaultRuleShrinksWithDimension) {
  EXPECT_EQ(default_sphere_rule(3).to_string(), "gauss:24");
  EXPECT_EQ(default_sphere_rule(6).to_string(), "gauss:7");
  SuiteParams p;
  EXPECT_EQ(p.sphere_rule().to_string(), "gauss:24");
  p.rule = "mc:5000:1";
  EXPECT_EQ(p.sphere_rule().to_string(), "mc:5000:1");
}

TEST(Suites, TableEndsWithSummary) {
  const std::string t = report_table(run_suite("cst", small(2)));
  EXPECT_NE(t.find("PASS: "), std::string::npos);
  EXPECT_EQ(t.back(), '\n');
}

TEST(Checks, RadonCheck) {
  EXPECT_TRUE(radon_check(3, 4, SphereRule::exact()).pass);
  EXPECT_TRUE(radon_check(2, 3, SphereRule::gauss(12)).pass);
  const CheckOutput mc = radon_check(2, 2, SphereRule::monte_carlo(20000, 9));
  EXPECT_TRUE(mc.pass);
  EXPECT_EQ(mc.json.at("rule"), "mc:20000:9");
  EXPECT_THROW(radon_check(3, 11, SphereRule::exact()), DomainError);
}

TEST(Checks, CstCheck) {
  const CheckOutput u = cst_check(2, "unitarity", 1, 1e-5);
  EXPECT_TRUE(u.pass);
  EXPECT_EQ(u.json.at("quad_levels"), io::Json::array({24, 48}));
  EXPECT_EQ(u.json.at("cases").size(), 4u);
  EXPECT_TRUE(cst_check(3, "ua-routes", 1, 1e-7).pass);
  EXPECT_TRUE(cst_check(3, "fueter-routes", 1, 1e-7).pass);
  // A tolerance below roundoff must fail rather than pass silently.
  EXPECT_FALSE(cst_check(3, "ua-routes", 2, 1e-30).pass);
  EXPECT_THROW(cst_check(3, "other", 1, 1e-7), std::invalid_argument);
}

TEST(Checks, FueterCheck) {
  const CheckOutput pw = fueter_check(3, 2);
  EXPECT_TRUE(pw.pass);
  EXPECT_EQ(pw.json.at("branch"), "positive");
  const CheckOutput lp = fueter_check(4, 0, LaurentPoly::monomial(-1) + LaurentPoly::monomial(5, make_rational(1, 3)));
  EXPECT_TRUE(lp.pass);
  EXPECT_LT(lp.json.at("residual").get<double>(), 1e-9);
  EXPECT_THROW(fueter_check(3, 11), DomainError);
}

}  // namespace
}  // namespace fsq
