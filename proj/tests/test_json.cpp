#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "fsq/suites.hpp"

namespace fsq {
namespace {

using P = RationalPolynomial;

TEST(Json, CliffordElementRoundTrip) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> c(-9, 9), d(1, 7);
  for (int m = 1; m <= 5; ++m) {
    Multivector<ComplexRational> a(m);
    for (std::uint32_t b = 0; b < (1u << m); ++b)
      a.add_term(Blade(b), ComplexRational(make_rational(c(rng), d(rng)), make_rational(c(rng), d(rng))));
    EXPECT_EQ(io::complex_clifford_from_json(io::to_json(a)), a);
    EXPECT_EQ(io::dump(io::to_json(io::complex_clifford_from_json(io::to_json(a)))), io::dump(io::to_json(a)));
  }
}

TEST(Json, CliffordElementFormat) {
  Multivector<Rational> a = Multivector<Rational>::blade(3, Blade(5), make_rational(-6, 4));
  const io::Json j = io::to_json(a);
  EXPECT_EQ(j.at("m"), 3);
  EXPECT_EQ(j.at("terms")[0].at("blade"), io::Json::array({1, 3}));
  EXPECT_EQ(j.at("terms")[0].at("re"), "-3/2");
  EXPECT_EQ(j.at("terms")[0].at("im"), "0");
}

TEST(Json, MalformedElementsAreRejected) {
  EXPECT_THROW(io::clifford_from_json(io::Json::parse(R"({"m": 3, "terms": [{"blade": [2, 1], "re": "1"}]})")), DomainError);
  EXPECT_THROW(io::clifford_from_json(io::Json::parse(R"({"m": 2, "terms": [{"blade": [3], "re": "1"}]})")), DimensionMismatch);
  EXPECT_THROW(io::clifford_from_json(io::Json::parse(R"({"m": 9, "terms": []})")), DimensionMismatch);
  EXPECT_THROW(io::clifford_from_json(io::Json::parse(R"({"m": 1, "terms": [{"blade": [], "re": "1", "im": "2"}]})")), DomainError);
  EXPECT_THROW(io::polynomial_from_json(io::Json::parse(R"({"m": 2, "terms": [{"exps": [1, 0], "coeff": {"m": 2, "terms": []}}]})")),
               DimensionMismatch);
  EXPECT_ANY_THROW(io::clifford_from_json(io::Json::parse(R"({"terms": []})")));
}

TEST(Json, PolynomialLaurentAndSeriesRoundTrip) {
  const P q = appell_Q(4, 3);
  EXPECT_EQ(io::polynomial_from_json(io::to_json(q)), q);
  const LaurentPoly f = LaurentPoly::monomial(-3, make_rational(5, 7)) + LaurentPoly::monomial(2, Rational(-1));
  EXPECT_EQ(io::laurent_from_json(io::to_json(f)), f);
  const AxialSeries s = gck_extension(f, 3);
  EXPECT_EQ(io::axial_series_from_json(io::to_json(s)), s);
}

TEST(Json, GoldenQpoly) {
  const std::string golden = io::read_file(std::string(FSQ_GOLDEN_DIR) + "/qpoly_m3_k2.json");
  EXPECT_EQ(io::dump(export_object("Qpoly", 3, 2)), golden);
  // Independent form: Q_2^3 = x0^2 + (2/3) x0 x_vec - |x_vec|^2 / 3.
  const P x0 = P::variable(3, 0);
  const P expect = x0 * x0 + (x0 * P::vector_variable(3)).scaled(make_rational(2, 3)) -
                   P::radius_squared(3).scaled(make_rational(1, 3));
  EXPECT_EQ(io::polynomial_from_json(io::Json::parse(golden).at("polynomial")), expect);
}

TEST(Json, ExportsAreByteStable) {
  for (const std::string& kind : export_kinds())
    for (int m : {1, 2, 3}) {
      const std::string a = io::dump(export_object(kind, m, 2));
      EXPECT_EQ(a, io::dump(export_object(kind, m, 2)));
      EXPECT_EQ(a, io::dump(io::Json::parse(a)));
      EXPECT_EQ(io::Json::parse(a).at("schema"), 1);
    }
}

TEST(Json, FueterPowerExportIsMinusFour) {
  const io::Json j = export_object("fueter_power", 3, 2);
  EXPECT_EQ(io::polynomial_from_json(j.at("result").at("polynomial")), P::constant(3, Rational(-4)));
  EXPECT_EQ(j.at("result").at("branch"), "positive");
}

TEST(Json, CauchyExportForThePlane) {
  const io::Json j = export_object("cauchyE", 1, 0);
  EXPECT_EQ(j.at("closed_form").at("m"), 1);
  // 1 / sigma_2 = 1 / (2 pi).
  EXPECT_NEAR(j.at("closed_form").at("scale").at("value")[0].get<double>(), 1 / (2 * 3.141592653589793), 1e-15);
}

TEST(Json, ExportErrors) {
  EXPECT_THROW(export_object("nope", 3, 1), std::invalid_argument);
  EXPECT_THROW(export_object("Qpoly", 3, -1), DomainError);
  EXPECT_THROW(export_object("Qpoly", 0, 1), DimensionMismatch);
}

TEST(Json, FileErrorsAreSurfaced) {
  EXPECT_THROW(io::read_file("/nonexistent/dir/file.json"), std::runtime_error);
  EXPECT_THROW(io::write_file("/nonexistent/dir/file.json", "{}"), std::runtime_error);
  const auto tmp = std::filesystem::temp_directory_path() / "fsq_json_test.json";
  io::write_file(tmp.string(), "{\"a\": 1}\n");
  EXPECT_EQ(io::read_file(tmp.string()), "{\"a\": 1}\n");
  std::filesystem::remove(tmp);
}

}  // namespace
}  // namespace fsq
