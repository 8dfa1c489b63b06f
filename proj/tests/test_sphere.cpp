#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fsq/sphere.hpp"

namespace fsq {
namespace {

using P = RationalPolynomial;

TEST(SphereRule, ParseAndFormatRoundTrip) {
  for (const std::string s : {"exact", "gauss:12", "mc:1000:7"}) EXPECT_EQ(SphereRule::parse(s).to_string(), s);
  EXPECT_EQ(SphereRule::parse("gauss:5").level, 5);
  EXPECT_EQ(SphereRule::parse("mc:20:3").samples, 20u);
  for (const std::string bad : {"", "gauss", "gauss:-1", "gauss:x", "mc:10", "mc:0:1", "simpson:4"})
    EXPECT_ANY_THROW(SphereRule::parse(bad)) << bad;
}

TEST(GaussRules, SmallLegendreAndHermite) {
  const GaussRule leg = gauss_gegenbauer(2, 0.0);
  ASSERT_EQ(leg.nodes.size(), 2u);
  EXPECT_NEAR(std::abs(leg.nodes[0]), 1 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(leg.weights[0], 1.0, 1e-14);
  EXPECT_NEAR(leg.weights[1], 1.0, 1e-14);
  const GaussRule her = gauss_hermite(2);
  EXPECT_NEAR(std::abs(her.nodes[0]), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(her.weights[0], std::sqrt(std::numbers::pi) / 2, 1e-14);
}

TEST(GaussRules, GegenbauerIntegratesPolynomialsExactly) {
  // int t^2 (1 - t^2)^{1/2} dt = pi / 8.
  const GaussRule g = gauss_gegenbauer(4, 0.5);
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * g.nodes[i] * g.nodes[i];
  EXPECT_NEAR(s, std::numbers::pi / 8, 1e-14);
}

TEST(SphereNodes, WeightsSumToArea) {
  for (int m = 1; m <= 5; ++m) {
    for (const SphereRule& rule : {SphereRule::gauss(6), SphereRule::monte_carlo(500, 3)}) {
      const SphereNodes n = sphere_nodes(rule, m);
      double w = 0.0;
      for (double x : n.weights) w += x;
      EXPECT_NEAR(w, sphere_area(m).real_value(), 1e-12);
      for (std::size_t i = 0; i < n.size(); ++i) {
        double r2 = 0.0;
        for (int j = 0; j < m; ++j) r2 += n.point(i)[j] * n.point(i)[j];
        ASSERT_NEAR(r2, 1.0, 1e-12);
      }
    }
  }
  EXPECT_THROW(sphere_nodes(SphereRule::exact(), 3), Unsupported);
}

TEST(SphereExact, MonomialAverages) {
  EXPECT_EQ(sphere_monomial_average({2, 0, 0}), make_rational(1, 3));
  EXPECT_EQ(sphere_monomial_average({4, 0, 0}), make_rational(1, 5));
  EXPECT_EQ(sphere_monomial_average({2, 2, 0}), make_rational(1, 15));
  EXPECT_EQ(sphere_monomial_average({1, 1, 0}), 0);
  for (int m = 1; m <= 7; ++m) {
    std::vector<int> a(m, 0);
    a[0] = 2;
    EXPECT_EQ(sphere_monomial_average(a), make_rational(1, m));
  }
  EXPECT_NEAR(sphere_monomial_integral({0, 0}).real_value(), 2 * std::numbers::pi, 1e-14);
}

TEST(SphereExact, AgreesWithProductGauss) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
  for (int m = 2; m <= 4; ++m) {
    P p(m);
    for (int t = 0; t < 6; ++t) {
      Monomial mo;
      for (int j = 1; j <= m; ++j) mo.e[j] = static_cast<std::uint8_t>(e(rng));
      p.add_term(mo, Multivector<Rational>::scalar(m, Rational(c(rng))) + Multivector<Rational>::generator(m, 1, Rational(c(rng))));
    }
    const Multivector<double> exact = sphere_integrate_exact(p).value();
    const NumericIntegral<double> num = sphere_integrate(p, SphereRule::gauss(8));
    EXPECT_LT(max_abs_diff(exact, num.value), 1e-11);
  }
  EXPECT_THROW(sphere_integrate_exact(P::variable(3, 0)), DomainError);
}

TEST(SphereExact, MonteCarloWithinStandardErrors) {
  const int m = 3;
  P p = P::variable(m, 1) * P::variable(m, 1) * P::variable(m, 2) * P::variable(m, 2);
  p += P::variable(m, 3).scaled(Rational(2));
  const double exact = sphere_integrate_exact(p).value().scalar_part();
  const NumericIntegral<double> mc = sphere_integrate(p, SphereRule::monte_carlo(200000, 5));
  EXPECT_GT(mc.std_error, 0.0);
  EXPECT_LT(std::abs(mc.value.scalar_part() - exact), 5 * mc.std_error);
}

TEST(FunkHecke, ConstantsMatchClosedForms) {
  for (int m = 1; m <= 5; ++m) {
    const double s = sphere_area(m).real_value();
    EXPECT_NEAR(funk_hecke_constants(m, 0).C0.real_value(), s, 1e-13);
    EXPECT_TRUE(funk_hecke_constants(m, 0).C1.is_zero());
    EXPECT_NEAR(funk_hecke_constants(m, 1).C1.real_value(), s / m, 1e-13);
    EXPECT_NEAR(funk_hecke_constants(m, 2).C0.real_value(), s / m, 1e-13);
    EXPECT_TRUE(funk_hecke_constants(m, 3).C0.is_zero());
    EXPECT_NEAR(funk_hecke_constants(m, 3).C1.real_value(), 3 * s / (m * (m + 2.0)), 1e-13);
  }
}

TEST(DualRadon, LinearAndPlaneWaveIdentities) {
  for (int m = 1; m <= 4; ++m) {
    const P lin = dual_radon(slice_extension(LaurentPoly::monomial(1), m).to_polynomial());
    EXPECT_EQ(lin, P::variable(m, 0) + P::vector_variable(m).scaled(make_rational(1, m)));
    for (int k = 0; k <= 6; ++k) {
      EXPECT_EQ(dual_radon(slice_extension(LaurentPoly::monomial(k), m).to_polynomial()), appell_Q(m, k)) << m << " " << k;
      EXPECT_TRUE(plane_wave_gck_check(LaurentPoly::monomial(k), m, SphereRule::exact()).pass());
    }
  }
}

TEST(DualRadon, NumericMatchesExactAtPoints) {
  const int m = 3;
  const std::vector<double> xv{0.3, -0.2, 0.1};
  for (int k = 0; k <= 5; ++k) {
    const ReportEntry e = plane_wave_gck_check(LaurentPoly::monomial(k), m, SphereRule::gauss(10), 0.8, xv, 1e-12);
    EXPECT_TRUE(e.pass()) << k << " " << e.residual;
  }
  const ReportEntry neg = plane_wave_gck_check(LaurentPoly::monomial(-3), m, SphereRule::gauss(24), -1.1, xv, 1e-9);
  EXPECT_TRUE(neg.pass()) << neg.residual;
}

TEST(DualRadon, CauchyKernelPlaneWaves) {
  for (int m = 1; m <= 4; ++m)
    for (double x0 : {1.0, -0.9}) {
      std::vector<double> xv(m, 0.15);
      EXPECT_TRUE(cauchy_plane_wave_check(m, x0, xv, SphereRule::gauss(24), 1e-6).pass()) << m << " " << x0;
      for (int k = 1; k <= 3; ++k)
        EXPECT_TRUE(monomial_plane_wave_check(m, k, x0, xv, SphereRule::gauss(24), 1e-6).pass()) << m << " " << k;
    }
}

TEST(DualRadon, CauchyCheckPreconditions) {
  EXPECT_THROW(cauchy_plane_wave_check(3, 0.5, {0.6, 0.0, 0.0}, SphereRule::gauss(8)), DomainError);
  EXPECT_THROW(cauchy_plane_wave_check(3, 1.0, {0.1, 0.0, 0.0}, SphereRule::exact()), Unsupported);
}

}  // namespace
}  // namespace fsq
