#include <gtest/gtest.h>

#include <random>

#include "fsq/extension.hpp"

namespace fsq {
namespace {

using P = RationalPolynomial;
using MV = Multivector<Rational>;

P x(int m, int var) { return P::variable(m, var); }

P random_poly(int m, int degree, std::mt19937_64& rng) {
  P p(m);
  std::uniform_int_distribution<int> var(0, m), coeff(-3, 3);
  for (int t = 0; t < 6; ++t) {
    Monomial mo;
    for (int i = 0; i < degree; ++i)
      if (rng() % 2) ++mo.e[var(rng)];
    MV c(m);
    for (std::uint32_t b = 0; b < (1u << m); ++b) c.add_term(Blade(b), Rational(coeff(rng)));
    p.add_term(mo, c);
  }
  return p;
}

TEST(Polynomial, ArithmeticAndPartials) {
  const int m = 3;
  const P p = x(m, 0) * x(m, 0) * x(m, 2) + x(m, 1).scaled(Rational(5));
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.partial(0), (x(m, 0) * x(m, 2)).scaled(Rational(2)));
  EXPECT_EQ(p.partial(1), P::constant(m, Rational(5)));
  EXPECT_TRUE(p.partial(3).is_zero());
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, NonCommutativeCoefficients) {
  const int m = 2;
  const MV e1 = MV::generator(m, 1), e2 = MV::generator(m, 2);
  const P a = x(m, 1).left_mul(e1), b = x(m, 2).left_mul(e2);
  EXPECT_EQ(a * b, (x(m, 1) * x(m, 2)).left_mul(e1 * e2));
  EXPECT_EQ(a * b + b * a, P(m));
}

TEST(Polynomial, LaplacianOfRadiusSquared) {
  for (int m = 1; m <= 6; ++m) {
    const P r2 = P::radius_squared(m) + x(m, 0) * x(m, 0);
    EXPECT_EQ(apply_operator(OperatorTag::Laplacian, r2), P::constant(m, Rational(2 * (m + 1))));
  }
}

TEST(Polynomial, DiracOfVectorVariable) {
  // D_x x_vec = sum_j e_j e_j = -m.
  for (int m = 1; m <= 6; ++m)
    EXPECT_EQ(apply_operator(OperatorTag::Dirac, P::vector_variable(m)), P::constant(m, Rational(-m)));
}

TEST(Polynomial, CauchyRiemannFactorization) {
  std::mt19937_64 rng(3);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 10; ++t) {
      const P p = random_poly(m, 4, rng);
      const P lap = apply_operator(OperatorTag::Laplacian, p);
      EXPECT_EQ(apply_operator(OperatorTag::D, apply_operator(OperatorTag::Dbar, p)), lap);
      EXPECT_EQ(apply_operator(OperatorTag::Dbar, apply_operator(OperatorTag::D, p)), lap);
      EXPECT_EQ(apply_operator(OperatorTag::D, p) + apply_operator(OperatorTag::Dbar, p),
                apply_operator(OperatorTag::PartialX0, p).scaled(Rational(2)));
    }
}

TEST(Polynomial, ParavectorPowerEvaluatesToPower) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 5; ++k) {
      Paravector<Rational> pt{make_rational(d(rng), 3), {}};
      for (int j = 0; j < m; ++j) pt.xv.push_back(make_rational(d(rng), 2));
      MV pw = MV::scalar(m, Rational(1));
      for (int i = 0; i < k; ++i) pw = pw * pt.to_multivector();
      EXPECT_EQ(paravector_power<Rational>(m, k).evaluate(pt), pw);
    }
}

TEST(Polynomial, MonogenicExamples) {
  // Only m = 1 makes x itself monogenic (the complex variable).
  EXPECT_TRUE(is_monogenic(paravector_power<Rational>(1, 3)));
  EXPECT_FALSE(is_monogenic(paravector_power<Rational>(2, 1)));
  // x_1 - e_1 x_0 is left monogenic for every m.
  for (int m = 1; m <= 5; ++m) {
    const P f = x(m, 1) - x(m, 0).left_mul(MV::generator(m, 1));
    EXPECT_TRUE(is_monogenic(f));
  }
}

TEST(Polynomial, EvaluateDoubleMatchesExact) {
  const int m = 3;
  const P p = appell_Q(m, 3);
  Paravector<Rational> pt{make_rational(1, 2), {make_rational(1, 3), make_rational(-1, 4), make_rational(2, 5)}};
  const Multivector<double> a = evaluate_double(p, 0.5, {1.0 / 3, -0.25, 0.4});
  EXPECT_LT(max_abs_diff(a, to_double(p.evaluate(pt))), 1e-15);
}

TEST(Polynomial, DimensionMismatch) {
  EXPECT_THROW(x(2, 0) + x(3, 0), DimensionMismatch);
  EXPECT_THROW(P::variable(2, 3), DimensionMismatch);
}

TEST(Polynomial, OperatorNames) {
  EXPECT_EQ(to_string(OperatorTag::D), "D");
  EXPECT_EQ(to_string(OperatorTag::Laplacian), "Laplacian");
}

}  // namespace
}  // namespace fsq
