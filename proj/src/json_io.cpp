#include "fsq/json_io.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsq::io {

namespace {

Json blade_indices(Blade b) {
  Json idx = Json::array();
  for (int i : b.indices()) idx.push_back(i);
  return idx;
}

Blade blade_from_indices(const Json& j, int m) {
  Blade b;
  int last = 0;
  for (const auto& v : j) {
    const int i = v.get<int>();
    if (i < 1 || i > m) throw DimensionMismatch("blade index out of range in JSON");
    if (i <= last) throw DomainError("blade indices in JSON must be strictly increasing");
    b.bits |= 1u << (i - 1);
    last = i;
  }
  return b;
}

int dim_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  return m;
}

template <typename S, typename F>
Json element_json(const Multivector<S>& a, F&& parts) {
  Json terms = Json::array();
  for (const auto& [b, c] : a.terms()) {
    Json t = parts(c);
    t["blade"] = blade_indices(b);
    terms.push_back(std::move(t));
  }
  return Json{{"m", a.dim()}, {"terms", std::move(terms)}};
}

}  // namespace

Json to_json(const Multivector<Rational>& a) {
  return element_json(a, [](const Rational& c) { return Json{{"re", format_rational(c)}, {"im", "0"}}; });
}

Json to_json(const Multivector<ComplexRational>& a) {
  return element_json(
      a, [](const ComplexRational& c) { return Json{{"re", format_rational(c.re)}, {"im", format_rational(c.im)}}; });
}

Json to_json(const Multivector<double>& a) {
  return element_json(a, [](double c) { return Json{{"re", c}, {"im", 0.0}}; });
}

Json to_json(const Multivector<ComplexDouble>& a) {
  return element_json(a, [](const ComplexDouble& c) { return Json{{"re", c.real()}, {"im", c.imag()}}; });
}

Multivector<ComplexRational> complex_clifford_from_json(const Json& j) {
  const int m = dim_from_json(j);
  Multivector<ComplexRational> out(m);
  for (const auto& t : j.at("terms")) {
    const Rational re = parse_rational(t.at("re").get<std::string>());
    const Rational im = t.contains("im") ? parse_rational(t.at("im").get<std::string>()) : Rational(0);
    out.add_term(blade_from_indices(t.at("blade"), m), ComplexRational(re, im));
  }
  return out;
}

Multivector<Rational> clifford_from_json(const Json& j) {
  const auto c = complex_clifford_from_json(j);
  Multivector<Rational> out(c.dim());
  for (const auto& [b, v] : c.terms()) {
    if (!fsq::is_zero(v.im)) throw DomainError("expected a real Clifford element");
    out.add_term(b, v.re);
  }
  return out;
}

Json to_json(const RationalPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mo, c] : p.terms()) {
    Json exps = Json::array();
    for (int j = 0; j <= p.dim(); ++j) exps.push_back(mo.e[j]);
    terms.push_back(Json{{"exps", std::move(exps)}, {"coeff", to_json(c)}});
  }
  return Json{{"m", p.dim()}, {"terms", std::move(terms)}};
}

RationalPolynomial polynomial_from_json(const Json& j) {
  const int m = dim_from_json(j);
  RationalPolynomial p(m);
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (static_cast<int>(exps.size()) != m + 1) throw DimensionMismatch("monomial exponent list must have m + 1 entries");
    Monomial mo;
    for (int i = 0; i <= m; ++i) {
      const int e = exps[i].get<int>();
      if (e < 0 || e > 255) throw DomainError("monomial exponent out of range");
      mo.e[i] = static_cast<std::uint8_t>(e);
    }
    const Multivector<Rational> c = clifford_from_json(t.at("coeff"));
    if (c.dim() != m) throw DimensionMismatch("coefficient dimension differs from polynomial");
    p.add_term(mo, c);
  }
  return p;
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [n, c] : f.terms()) terms.push_back(Json{{"n", n}, {"coeff", format_rational(c)}});
  return Json{{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly f;
  for (const auto& t : j.at("terms")) f.add_term(t.at("n").get<int>(), parse_rational(t.at("coeff").get<std::string>()));
  return f;
}

Json to_json(const AxialSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_json(c));
  return Json{{"m", s.m}, {"order", s.order}, {"exact", s.exact}, {"coeffs", std::move(coeffs)}};
}

AxialSeries axial_series_from_json(const Json& j) {
  AxialSeries s;
  s.m = dim_from_json(j);
  s.order = j.at("order").get<int>();
  s.exact = j.at("exact").get<bool>();
  for (const auto& c : j.at("coeffs")) s.coeffs.push_back(laurent_from_json(c));
  if (static_cast<int>(s.coeffs.size()) != s.order + 1) throw DomainError("AxialSeries needs order + 1 coefficients");
  return s;
}

Json to_json(const PiScalar& s) {
  const ComplexDouble v = s.value();
  return Json{{"re", format_rational(s.coeff.re)},
              {"im", format_rational(s.coeff.im)},
              {"pi_half_power", s.is_zero() ? 0 : s.half_power},
              {"value", Json::array({v.real(), v.imag()})}};
}

namespace {

Json radial_json(const RadialExpr& e) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms())
    terms.push_back(
        Json{{"x0", std::get<0>(k)}, {"r", std::get<1>(k)}, {"rho_half", std::get<2>(k)}, {"coeff", format_rational(c)}});
  return terms;
}

}  // namespace

Json to_json(const AxialClosedForm& f) {
  return Json{{"m", f.m},
              {"scale", to_json(f.scale)},
              {"sign_power", f.sign_power},
              {"A", radial_json(f.A)},
              {"B", radial_json(f.B)}};
}

Json to_json(const ReportEntry& e, bool timings) {
  Json j{{"identity", e.identity}, {"anchor", e.anchor}, {"m", e.m},         {"k", e.k},
         {"exact", e.exact},       {"residual", e.residual}, {"tolerance", e.tolerance}, {"pass", e.pass()}};
  if (timings) j["elapsed_ms"] = e.elapsed_ms;
  return j;
}

Json to_json(const FueterResult& r) {
  Json j{{"m", r.m},
         {"power", r.power},
         {"branch", to_string(r.branch)},
         {"scale", to_json(r.scale)},
         {"cross_check_exact", r.cross_check_exact},
         {"residual", r.residual}};
  if (r.polynomial) j["polynomial"] = to_json(*r.polynomial);
  if (r.series) j["series"] = to_json(*r.series);
  if (r.closed_form) j["closed_form"] = to_json(*r.closed_form);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed: " + std::strerror(errno));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading: " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fsq::io
