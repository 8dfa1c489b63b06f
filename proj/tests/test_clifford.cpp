#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fsq/constants.hpp"
#include "fsq/clifford.hpp"

namespace fsq {
namespace {

using MV = Multivector<Rational>;

Rational rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return make_rational(num(rng), den(rng));
}

MV random_mv(int m, std::mt19937_64& rng) {
  MV a(m);
  for (std::uint32_t b = 0; b < (1u << m); ++b)
    if (rng() % 3 != 0) a.add_term(Blade(b), rand_q(rng));
  return a;
}

// Reference sign: write e_A e_B as a word of generator indices and bubble sort it,
// flipping the sign per swap and per contracted pair e_j e_j = -1.
int word_sign(Blade a, Blade b) {
  std::vector<int> word = a.indices();
  for (int j : b.indices()) word.push_back(j);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return sign;
}

TEST(Rational, ParseAndFormatAreCanonical) {
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-10/5")), "-2");
  EXPECT_EQ(format_rational(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("4/-6"), make_rational(-2, 3));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(6), 48);
  EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
  EXPECT_EQ(rational_pow(make_rational(2, 3), -2), make_rational(9, 4));
}

TEST(Blade, ProductSignMatchesWordReduction) {
  for (std::uint32_t a = 0; a < 32; ++a)
    for (std::uint32_t b = 0; b < 32; ++b)
      ASSERT_EQ(blade_product_sign(Blade(a), Blade(b)), word_sign(Blade(a), Blade(b))) << a << " " << b;
}

TEST(Multivector, GeneratorRelations) {
  for (int m = 1; m <= 7; ++m)
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        const MV ej = MV::generator(m, j), el = MV::generator(m, l);
        EXPECT_EQ(ej * el + el * ej, MV::scalar(m, Rational(j == l ? -2 : 0)));
      }
}

TEST(Multivector, QuaternionsAndPseudoscalar) {
  // m = 2: e1, e2, e1 e2 behave like i, j, k.
  const MV i = MV::generator(2, 1), j = MV::generator(2, 2);
  const MV k = i * j;
  EXPECT_EQ(k * k, MV::scalar(2, Rational(-1)));
  EXPECT_EQ(j * k, i);
  // In Cl_{0,3} the pseudoscalar squares to +1.
  const MV e123 = MV::blade(3, Blade(7));
  EXPECT_EQ(e123 * e123, MV::scalar(3, Rational(1)));
}

TEST(Multivector, AssociativityOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 5; ++m)
    for (int t = 0; t < 40; ++t) {
      const MV a = random_mv(m, rng), b = random_mv(m, rng), c = random_mv(m, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(Multivector, ConjugationIsAnAntiInvolution) {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 5; ++m)
    for (int t = 0; t < 40; ++t) {
      const MV a = random_mv(m, rng), b = random_mv(m, rng);
      ASSERT_EQ(clifford_conjugate(a * b), clifford_conjugate(b) * clifford_conjugate(a));
      ASSERT_EQ(clifford_conjugate(clifford_conjugate(a)), a);
    }
  EXPECT_EQ(clifford_conjugate(MV::generator(3, 2)), -MV::generator(3, 2));
  EXPECT_EQ(clifford_conjugate(MV::blade(3, Blade(3))), -MV::blade(3, Blade(3)));
  EXPECT_EQ(clifford_conjugate(MV::blade(3, Blade(7))), MV::blade(3, Blade(7)));
}

TEST(Multivector, HermitianConjugation) {
  using CMV = Multivector<ComplexRational>;
  std::mt19937_64 rng(13);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 30; ++t) {
      CMV a(m), b(m);
      for (std::uint32_t bl = 0; bl < (1u << m); ++bl) {
        a.add_term(Blade(bl), ComplexRational(rand_q(rng), rand_q(rng)));
        b.add_term(Blade(bl), ComplexRational(rand_q(rng), rand_q(rng)));
      }
      ASSERT_EQ(hermitian_conjugate(a * b), hermitian_conjugate(b) * hermitian_conjugate(a));
      ASSERT_EQ(hermitian_conjugate(hermitian_conjugate(a)), a);
    }
  // (i e1)^dagger = (-i)(-e1) = i e1.
  const CMV ie1 = CMV::generator(2, 1, ComplexRational::i());
  EXPECT_EQ(hermitian_conjugate(ie1), ie1);
}

TEST(Paravector, TimesConjugateIsNormSquared) {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 6; ++m) {
    Paravector<Rational> x{rand_q(rng), {}};
    for (int j = 0; j < m; ++j) x.xv.push_back(rand_q(rng));
    EXPECT_EQ(x.to_multivector() * x.conj().to_multivector(), MV::scalar(m, x.norm_squared()));
    EXPECT_EQ(x.conj().to_multivector(), clifford_conjugate(x.to_multivector()));
  }
}

TEST(Multivector, DimensionErrors) {
  EXPECT_THROW(MV(0), DimensionMismatch);
  EXPECT_THROW(MV(8), DimensionMismatch);
  EXPECT_THROW(MV::generator(3, 4), DimensionMismatch);
  EXPECT_THROW(MV::generator(2, 1) * MV::generator(3, 1), DimensionMismatch);
  MV a(2);
  EXPECT_THROW(a.add_term(Blade(4), Rational(1)), DimensionMismatch);
}

TEST(Multivector, CancellationLeavesNoZeroTerms) {
  MV a = MV::generator(3, 1) + MV::generator(3, 2);
  a -= MV::generator(3, 1);
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Constants, SphereAreas) {
  EXPECT_NEAR(sphere_area(1).real_value(), 2.0, 1e-15);
  EXPECT_NEAR(sphere_area(2).real_value(), 2 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_area(3).real_value(), 4 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_area(4).real_value(), 2 * std::numbers::pi * std::numbers::pi, 1e-13);
  for (int n = 1; n <= 9; ++n)
    EXPECT_NEAR(sphere_area(n).real_value(), 2 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0), 1e-12);
}

TEST(Constants, GammaHalfAndIPower) {
  EXPECT_NEAR(gamma_half(1).real_value(), std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_EQ(gamma_half(2), PiScalar(Rational(1)));
  EXPECT_EQ(gamma_half(5), PiScalar(make_rational(3, 4), 1));
  EXPECT_EQ(i_power(0), ComplexRational(1));
  EXPECT_EQ(i_power(1), ComplexRational::i());
  EXPECT_EQ(i_power(-1), -ComplexRational::i());
  EXPECT_EQ(i_power(6), ComplexRational(-1));
}

TEST(Constants, GammaMOddClosedForm) {
  EXPECT_EQ(constants(1).gamma_m, PiScalar(Rational(1)));
  EXPECT_EQ(constants(3).gamma_m, PiScalar(Rational(-2)));
  EXPECT_EQ(constants(5).gamma_m, PiScalar(make_rational(8, 3)));
  for (int m = 1; m <= 7; m += 2) EXPECT_EQ(constants(m).gamma_m, PiScalar(gamma_odd_closed_form(m)));
}

TEST(Constants, GammaMEvenIsImaginaryWithPi) {
  for (int m = 2; m <= 6; m += 2) {
    const DimensionConstants c = constants(m);
    EXPECT_FALSE(c.gamma_m.is_real());
    const double expect = std::pow(2.0, m - 1) * std::pow(std::tgamma((m + 1) / 2.0), 2) / std::tgamma(m);
    EXPECT_NEAR(std::abs(c.gamma_m.value()), expect, 1e-12 * expect);
  }
}

}  // namespace
}  // namespace fsq
