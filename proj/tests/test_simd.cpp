#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "fsq/clifford.hpp"
#include "fsq/simd.hpp"

namespace fsq {
namespace {

class SimdTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!simd::avx2_available()) GTEST_SKIP() << "no AVX2/FMA on this CPU";
  }
  void TearDown() override { simd::reset_backend(); }
};

std::vector<double> random_doubles(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

TEST_F(SimdTest, WeightedSumMatchesScalarIncludingTails) {
  std::mt19937_64 rng(101);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto v = random_doubles(n, rng), w = random_doubles(n, rng);
    const double a = simd::scalar::weighted_sum(v.data(), w.data(), n);
    const double b = simd::avx2::weighted_sum(v.data(), w.data(), n);
    EXPECT_NEAR(a, b, 1e-12 * (1.0 + std::abs(a))) << n;
  }
}

TEST_F(SimdTest, PowerMomentMatchesScalar) {
  std::mt19937_64 rng(103);
  for (std::size_t n : {0u, 1u, 3u, 4u, 9u, 64u, 1001u})
    for (int k = 0; k <= 6; ++k) {
      const auto x = random_doubles(n, rng), w = random_doubles(n, rng);
      const double a = simd::scalar::power_moment(x.data(), w.data(), n, k);
      const double b = simd::avx2::power_moment(x.data(), w.data(), n, k);
      EXPECT_NEAR(a, b, 1e-11 * (1.0 + std::abs(a))) << n << " " << k;
    }
}

TEST_F(SimdTest, GeometricProductMatchesScalarAndExact) {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> c(-8, 8);
  for (int m = 1; m <= 7; ++m) {
    const std::size_t n = std::size_t{1} << m;
    for (int t = 0; t < 10; ++t) {
      std::vector<float> a(n), b(n), s(n), v(n);
      Multivector<Rational> ea(m), eb(m);
      for (std::uint32_t i = 0; i < n; ++i) {
        a[i] = static_cast<float>(c(rng));
        b[i] = static_cast<float>(c(rng));
        ea.add_term(Blade(i), Rational(static_cast<long>(a[i])));
        eb.add_term(Blade(i), Rational(static_cast<long>(b[i])));
      }
      simd::scalar::geometric_product(m, a.data(), b.data(), s.data());
      simd::avx2::geometric_product(m, a.data(), b.data(), v.data());
      const Multivector<Rational> exact = ea * eb;
      for (std::uint32_t i = 0; i < n; ++i) {
        // Small integer inputs keep every partial sum exact in float.
        ASSERT_EQ(s[i], v[i]) << m << " " << i;
        ASSERT_EQ(static_cast<double>(s[i]), exact.coeff(Blade(i)).get_d()) << m << " " << i;
      }
    }
  }
}

TEST_F(SimdTest, SignTableMatchesBladeSigns) {
  for (int m = 1; m <= 5; ++m) {
    const float* table = simd::product_sign_table(m);
    const std::uint32_t n = 1u << m;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        ASSERT_EQ(table[a * n + (a ^ b)], static_cast<float>(blade_product_sign(Blade(a), Blade(b))));
  }
}

// FSQ_FORCE_SCALAR is read once per process; the CLI ctest entries cover it.
TEST_F(SimdTest, BackendOverride) {
  simd::set_backend(simd::Backend::Scalar);
  EXPECT_EQ(simd::active_backend(), simd::Backend::Scalar);
  simd::set_backend(simd::Backend::Avx2);
  EXPECT_EQ(simd::active_backend(), simd::Backend::Avx2);
  simd::reset_backend();
  EXPECT_EQ(simd::active_backend(), std::getenv("FSQ_FORCE_SCALAR") ? simd::Backend::Scalar : simd::Backend::Avx2);
  EXPECT_STREQ(simd::to_string(simd::Backend::Avx2), "avx2");
}

TEST_F(SimdTest, DispatchedResultsAgreeAcrossBackends) {
  std::mt19937_64 rng(109);
  const auto v = random_doubles(1000, rng), w = random_doubles(1000, rng);
  simd::set_backend(simd::Backend::Scalar);
  const double a = simd::weighted_sum(v.data(), w.data(), v.size());
  simd::set_backend(simd::Backend::Avx2);
  const double b = simd::weighted_sum(v.data(), w.data(), v.size());
  EXPECT_NEAR(a, b, 1e-12 * (1.0 + std::abs(a)));
}

}  // namespace
}  // namespace fsq
