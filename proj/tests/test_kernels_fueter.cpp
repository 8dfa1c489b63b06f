#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fsq/fueter.hpp"
#include "fsq/kernels.hpp"

namespace fsq {
namespace {

using P = RationalPolynomial;

std::vector<double> random_vec(int m, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(m);
  for (auto& x : v) x = u(rng);
  return v;
}

// Central-difference D f = d_0 f + sum_j e_j d_j f.
Multivector<double> dirac_fd(const PointFunction& f, int m, double x0, const std::vector<double>& xv) {
  const double h = 1e-5;
  Multivector<double> out = (f(x0 + h, xv) - f(x0 - h, xv)).scaled(0.5 / h);
  for (int j = 0; j < m; ++j) {
    std::vector<double> a = xv, b = xv;
    a[j] += h;
    b[j] -= h;
    out += Multivector<double>::generator(m, j + 1) * (f(x0, a) - f(x0, b)).scaled(0.5 / h);
  }
  return out;
}

TEST(Kernels, PlanarCauchyKernel) {
  // m = 1: E = 1 / (2 pi z) with e_1 playing the role of i.
  const AxialClosedForm E = cauchy_kernel(1);
  for (auto [x0, x1] : {std::pair{1.0, 0.5}, std::pair{-0.3, 2.0}, std::pair{0.7, -0.1}}) {
    const std::complex<double> w = 1.0 / (2 * std::numbers::pi * std::complex<double>(x0, x1));
    const Multivector<double> v = E.evaluate(x0, {x1});
    EXPECT_NEAR(v.scalar_part(), w.real(), 1e-15);
    EXPECT_NEAR(v.coeff(Blade::generator(1)), w.imag(), 1e-15);
  }
}

TEST(Kernels, CauchyKernelIsMonogenic) {
  std::mt19937_64 rng(31);
  for (int m = 2; m <= 4; ++m) {
    const AxialClosedForm E = cauchy_kernel(m);
    const PointFunction f = [&](double x0, const std::vector<double>& xv) { return E.evaluate(x0, xv); };
    for (int t = 0; t < 5; ++t) {
      const std::vector<double> xv = random_vec(m, -1.0, 1.0, rng);
      EXPECT_LT(dirac_fd(f, m, 0.4 + 0.1 * t, xv).norm(), 1e-6);
    }
  }
}

TEST(Kernels, CauchyKernelFormula) {
  const int m = 3;
  const std::vector<double> xv{0.2, -0.4, 0.1};
  const double x0 = 0.8;
  double n2 = x0 * x0;
  for (double v : xv) n2 += v * v;
  const double s4 = sphere_area(m + 1).real_value();
  const Multivector<double> e = cauchy_kernel(m).evaluate(x0, xv);
  EXPECT_NEAR(e.scalar_part(), x0 / (s4 * n2 * n2), 1e-15);
  for (int j = 0; j < m; ++j) EXPECT_NEAR(e.coeff(Blade::generator(j + 1)), -xv[j] / (s4 * n2 * n2), 1e-15);
}

TEST(Kernels, KelvinSymbolicMatchesPointwise) {
  std::mt19937_64 rng(37);
  for (int m = 1; m <= 4; ++m) {
    const AxialClosedForm E = cauchy_kernel(m);
    const AxialClosedForm IE = kelvin_inversion(E);
    const PointFunction f = [&](double x0, const std::vector<double>& xv) { return E.evaluate(x0, xv); };
    const PointFunction If = [&](double x0, const std::vector<double>& xv) { return kelvin_inversion(f, m, x0, xv); };
    for (int t = 0; t < 5; ++t) {
      const double x0 = t % 2 ? 0.9 : -0.6;
      const std::vector<double> xv = random_vec(m, -0.8, 0.8, rng);
      EXPECT_LT(max_abs_diff(IE.evaluate(x0, xv), If(x0, xv)), 1e-12);
      // Kelvin inversion is an involution.
      EXPECT_LT(max_abs_diff(kelvin_inversion(If, m, x0, xv), f(x0, xv)), 1e-12);
    }
  }
}

TEST(Kernels, MinusOneMonomialIsScaledCauchyKernel) {
  for (int m = 1; m <= 4; ++m) {
    const DimensionConstants c = constants(m);
    const double scale = (c.sigma_m1 * c.lambda_m).real_value();
    const Multivector<double> a = monogenic_monomial(m, -1).closed_form.evaluate(0.7, std::vector<double>(m, 0.2));
    const Multivector<double> b = cauchy_kernel(m).evaluate(0.7, std::vector<double>(m, 0.2)).scaled(scale);
    EXPECT_LT(max_abs_diff(a, b), 1e-12 * b.norm());
  }
}

TEST(Kernels, PositiveMonomialsAreMultiplesOfAppellPolynomials) {
  for (int m = 1; m <= 4; ++m)
    for (int order = 0; order <= 4; ++order) {
      const ScaledPolynomial sp = closed_form_to_polynomial(monogenic_monomial(m, order).closed_form);
      EXPECT_TRUE(is_monogenic(sp.poly));
      const P q = appell_Q(m, order);
      Monomial top = Monomial::unit(0, order);
      const Rational ratio = sp.poly.coeff(top).scalar_part() / q.coeff(top).scalar_part();
      EXPECT_EQ(sp.poly, q.scaled(ratio)) << m << " " << order;
    }
}

TEST(Kernels, Prop45ExactIdentitiesAndDefaultTruncation) {
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k <= 3; ++k)
      for (const ReportEntry& e : verify_prop45(m, k, -1)) EXPECT_TRUE(e.pass()) << e.identity << " m=" << m << " k=" << k << " residual=" << e.residual;
}

TEST(Kernels, ClosedFormToPolynomialRejectsNegativePowers) {
  EXPECT_THROW(closed_form_to_polynomial(cauchy_kernel(3)), Unsupported);
}

TEST(Fueter, BranchClassification) {
  for (int m = 1; m <= 5; ++m)
    for (int l = -3; l <= 8; ++l) {
      const FueterResult r = tau_on_power(m, l);
      const FueterBranch expect = l < 0 ? FueterBranch::Negative : l <= m - 2 ? FueterBranch::Kernel : FueterBranch::Positive;
      EXPECT_EQ(r.branch, expect) << m << " " << l;
      if (expect == FueterBranch::Kernel) {
        ASSERT_TRUE(r.polynomial.has_value());
        EXPECT_TRUE(r.polynomial->is_zero());
      }
      if (r.cross_check_exact)
        EXPECT_EQ(r.residual, 0.0);
      else
        EXPECT_LT(r.residual, 1e-9);
    }
}

TEST(Fueter, SquareInThreeDimensionsIsMinusFour) {
  const FueterResult r = tau_on_power(3, 2);
  ASSERT_TRUE(r.polynomial.has_value());
  EXPECT_EQ((ScaledPolynomial{r.scale, *r.polynomial}), (ScaledPolynomial{PiScalar(Rational(1)), P::constant(3, Rational(-4))}));
}

TEST(Fueter, AppellImageForEvenAndOddDimensions) {
  for (int m : {2, 3, 4, 5})
    for (int k = 0; k <= 6; ++k) {
      const FueterResult r = tau_on_power(m, m - 1 + k);
      const PiScalar c = constants(m).gamma_m * PiScalar(factorial(m - 1 + k) / factorial(k));
      EXPECT_EQ((ScaledPolynomial{r.scale, *r.polynomial}), (ScaledPolynomial{c, appell_Q(m, k)})) << m << " " << k;
    }
}

TEST(Fueter, LaplacianRouteForOddDimensions) {
  for (int m : {3, 5})
    for (int k = 0; k <= 8; ++k) {
      const LaplacianRouteResult lr = laplacian_power_route(m, LaurentPoly::monomial(k));
      const LaurentPoly d = LaurentPoly::monomial(k).derivative(m - 1);
      const P expect = gck_extension(d, m).to_polynomial().scaled(gamma_odd_closed_form(m));
      ASSERT_TRUE(lr.polynomial.has_value());
      EXPECT_EQ(*lr.polynomial, expect) << m << " " << k;
    }
}

TEST(Fueter, LaplacianRouteNeedsOddDimension) {
  EXPECT_THROW(laplacian_power_route(2, LaurentPoly::monomial(3)), Unsupported);
  EXPECT_THROW(lemma41_AB(4, intrinsic_split(LaurentPoly::monomial(3))), Unsupported);
}

TEST(Fueter, LaplacianOfInverseInThreeDimensions) {
  // Delta[x^{-1}] = -4 conj(x) / |x|^4 for m = 3, checked against the direct formula.
  const AxialClosedForm lap = *laplacian_power_route(3, LaurentPoly::monomial(-1)).closed_form;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    const double x0 = u(rng);
    const std::vector<double> xv{u(rng), u(rng), u(rng)};
    const double n2 = x0 * x0 + xv[0] * xv[0] + xv[1] * xv[1] + xv[2] * xv[2];
    Multivector<double> expect = Multivector<double>::scalar(3, -4 * x0 / (n2 * n2));
    for (int j = 0; j < 3; ++j) expect.add_term(Blade::generator(j + 1), 4 * xv[j] / (n2 * n2));
    const Multivector<double> got = lap.evaluate(x0, xv);
    EXPECT_LT(max_abs_diff(got, expect), 1e-8 * std::max(1.0, expect.norm()));
  }
}

TEST(Fueter, LaurentImageIsLinear) {
  const int m = 3;
  const LaurentPoly f = LaurentPoly::monomial(-2, make_rational(1, 2)) + LaurentPoly::monomial(4, Rational(3));
  const ScaledSeries s = tau_on_laurent(m, f);
  const FueterResult a = tau_on_power(m, -2), b = tau_on_power(m, 4);
  for (double x0 : {1.0, -0.8}) {
    const double r = 0.25 * std::abs(x0);
    const AxialValue v = s.series.evaluate_axial(x0, r);
    const auto [A1, B1] = a.closed_form->evaluate_axial_complex(x0, r);
    const auto [A2, B2] = b.closed_form->evaluate_axial_complex(x0, r);
    const ComplexDouble sc = s.scale.value();
    EXPECT_LT(std::abs(sc * v.A - 0.5 * A1 - 3.0 * A2), 1e-9);
    EXPECT_LT(std::abs(sc * v.B - 0.5 * B1 - 3.0 * B2), 1e-9);
  }
}

TEST(Fueter, Lemma41MatchesTau) {
  for (int k = 0; k <= 6; ++k) {
    const AxialClosedForm ab = lemma41_AB(3, intrinsic_split(LaurentPoly::monomial(k)));
    const FueterResult r = tau_on_power(3, k);
    EXPECT_EQ(closed_form_to_polynomial(ab), (ScaledPolynomial{r.scale, *r.polynomial})) << k;
  }
}

}  // namespace
}  // namespace fsq
