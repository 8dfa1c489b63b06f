#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fsq/cst.hpp"

namespace fsq {
namespace {

struct Point {
  double x0;
  std::vector<double> xv;
};

std::vector<Point> points(int m) {
  std::vector<double> a(m, 0.0), b(m, 0.3 / std::sqrt(static_cast<double>(m))), c(m, 0.0);
  a[0] = 0.5;
  c[m - 1] = 0.8;
  return {{0.7, a}, {-0.4, b}, {0.2, c}};
}

double hermite_oracle(int n, double x) {
  // Physicists' Hermite recurrence, normalized.
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) h1 = h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi));
  return h1 * std::exp(-x * x / 2) / norm;
}

TEST(GaussPoly, HermiteFunctionsMatchRecurrence) {
  for (int n = 0; n <= 6; ++n)
    for (double x : {-1.7, -0.2, 0.0, 0.9, 2.3})
      EXPECT_NEAR(GaussPoly::hermite(2, n).evaluate(x).scalar_part().real(), hermite_oracle(n, x), 1e-13) << n << " " << x;
}

TEST(GaussPoly, DerivativeAndTimesX) {
  const GaussPoly g = GaussPoly::gaussian(1, make_rational(1, 2));
  // (e^{-x^2/2})' = -x e^{-x^2/2}.
  EXPECT_EQ(g.derivative(), g.times_x().scaled(ComplexRational(Rational(-1))));
  EXPECT_THROW(g + GaussPoly::gaussian(1, Rational(1)), DomainError);
}

TEST(GaussPoly, FourierTransformOfGaussian) {
  const GaussPoly g = GaussPoly::gaussian(1, make_rational(1, 2));
  const GaussPoly f = g.fourier_transform();
  for (double p : {-1.0, 0.0, 0.4, 2.0}) EXPECT_NEAR(std::abs(f.evaluate(p).scalar_part() - std::exp(-p * p / 2)), 0.0, 1e-14);
}

TEST(Heat, GaussianClosedForm) {
  const GaussPoly g = GaussPoly::gaussian(2, make_rational(1, 2));
  for (double x : {-1.0, 0.0, 0.6, 1.8}) {
    const ComplexDouble expect = std::exp(-x * x / 4) / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(heat_semigroup(g).evaluate(x).scalar_part() - expect), 0.0, 1e-14);
  }
  const ComplexDouble z(0.4, -0.7);
  EXPECT_NEAR(std::abs(classical_cst(g, z).scalar_part() - std::exp(-z * z / 4.0) / std::sqrt(2.0)), 0.0, 1e-14);
}

TEST(Heat, ClosedFormMatchesQuadrature) {
  for (int n = 0; n <= 4; ++n) {
    const GaussPoly h = GaussPoly::hermite(3, n);
    for (double x : {-1.3, 0.0, 0.5, 2.0})
      EXPECT_LT(max_abs_diff(heat_semigroup(h).evaluate(x), heat_semigroup_quadrature(h, x)), 1e-12);
  }
}

TEST(Heat, CommutesWithDerivative) {
  for (int n = 0; n <= 4; ++n) {
    const GaussPoly h = GaussPoly::hermite(2, n);
    for (int j = 1; j <= 5; ++j) EXPECT_EQ(heat_semigroup(h.derivative(j)), heat_semigroup(h).derivative(j));
  }
}

TEST(SliceCst, FourierRouteAndParity) {
  for (int n = 0; n <= 3; ++n) {
    const GaussPoly h = GaussPoly::hermite(3, n);
    for (double r : {0.0, 0.4, 1.1}) {
      const SliceValue a = slice_cst(h, 0.3, r), b = slice_cst_fourier(h, 0.3, r);
      EXPECT_LT(max_abs_diff(a.alpha, b.alpha), 1e-9);
      EXPECT_LT(max_abs_diff(a.beta, b.beta), 1e-9);
    }
    const SliceValue p = slice_cst(h, -0.2, 0.7), q = slice_cst(h, -0.2, -0.7);
    EXPECT_LT(max_abs_diff(p.alpha, q.alpha), 1e-14);
    EXPECT_LT(max_abs_diff(p.beta, q.beta.scaled(-1.0)), 1e-14);
  }
}

TEST(AxialCst, TruncationBoundIsEnforced) {
  const GaussPoly h = GaussPoly::hermite(3, 2);
  const AxialCstResult r = axial_cst(h, 0.5, {0.3, 0.0, 0.2});
  EXPECT_LT(r.remainder_bound, 1e-10);
  EXPECT_GE(r.order, 4);
  EXPECT_THROW(axial_cst(h, 0.5, {0.3, 0.0, 0.2}, 2), DomainError);
}

TEST(AxialCst, RoutesAgreeOnHermiteFamily) {
  for (int m : {2, 3})
    for (int n = 0; n <= 3; ++n) {
      const GaussPoly h = GaussPoly::hermite(m, n);
      for (const Point& pt : points(m)) {
        const AxialCstResult ua = axial_cst(h, pt.x0, pt.xv);
        EXPECT_LT(max_abs_diff(ua.value, axial_cst_radon(h, pt.x0, pt.xv, SphereRule::gauss(24))), 1e-7);
        const FueterCstResult fr = fueter_cst(h, pt.x0, pt.xv);
        EXPECT_LT(fr.residual_commuted, 1e-7);
        EXPECT_LT(fr.residual_radon, 1e-7);
      }
    }
}

TEST(AxialCst, OneDimensionalAxialIsClassical) {
  // For m = 1 the GCK of an entire function is its holomorphic extension.
  const GaussPoly h = GaussPoly::hermite(1, 3);
  const AxialCstResult ua = axial_cst(h, 0.4, {0.3});
  const ComplexMultivector z = classical_cst(h, ComplexDouble(0.4, 0.3));
  // e_1 carries the imaginary part of U[f](x0 + i x1).
  EXPECT_NEAR(std::abs(ua.value.scalar_part() - ComplexDouble(z.scalar_part().real(), 0.0)), 0.0, 1e-9);
}

TEST(Unitarity, HermiteGramMatrix) {
  for (int m : {2, 3})
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        const UnitarityResult u = unitarity_check(GaussPoly::hermite(m, i), GaussPoly::hermite(m, j));
        EXPECT_LT(u.residual, 1e-5);
        EXPECT_TRUE(u.converged);
        EXPECT_NEAR(std::abs(u.lhs.scalar_part()), i == j ? 1.0 : 0.0, 1e-12);
      }
}

TEST(Unitarity, RadialMassIsOne) {
  EXPECT_NEAR(MeasureDvm{3}.radial_mass(), 1.0, 1e-14);
}

}  // namespace
}  // namespace fsq
