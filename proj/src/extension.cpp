#include "fsq/extension.hpp"

#include <cmath>
#include <complex>

#include "fsq/constants.hpp"

namespace fsq {

namespace {

/// x_0 polynomial (scalar coefficients) lifted to a Clifford polynomial.
RationalPolynomial axis_polynomial(int m, const LaurentPoly& f) {
  if (!f.is_polynomial()) throw Unsupported("negative powers have no polynomial form");
  RationalPolynomial p(m);
  for (const auto& [n, c] : f.terms()) p.add_term(Monomial::unit(0, n), Multivector<Rational>::scalar(m, c));
  return p;
}

/// x_vec^j as (scalar factor, has vector part) at radius r: x_vec^{2i} = (-1)^i r^{2i},
/// x_vec^{2i+1} = (-1)^i r^{2i} x_vec.
double vector_power_factor(int j, double r) {
  const int i = j / 2;
  const double s = (i % 2 == 0) ? 1.0 : -1.0;
  return s * std::pow(r, 2 * i);
}

}  // namespace

Multivector<double> axial_to_multivector(int m, const AxialValue& v, const std::vector<double>& xv) {
  if (static_cast<int>(xv.size()) != m) throw DimensionMismatch("point has wrong dimension");
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  const double r = std::sqrt(r2);
  Multivector<double> out = Multivector<double>::scalar(m, v.A);
  if (r > 0.0)
    for (int j = 0; j < m; ++j) out.add_term(Blade::generator(j + 1), xv[j] * v.B / r);
  return out;
}

AxialValue AxialSeries::evaluate_axial(double x0, double r) const {
  AxialValue v;
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
    if (coeffs[j].is_zero()) continue;
    const double f = coeffs[j].evaluate(x0) * vector_power_factor(j, r);
    if (j % 2 == 0) {
      v.A += f;
    } else {
      v.B += f * r;
    }
  }
  return v;
}

Multivector<double> AxialSeries::evaluate(double x0, const std::vector<double>& xv) const {
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  return axial_to_multivector(m, evaluate_axial(x0, std::sqrt(r2)), xv);
}

RationalPolynomial AxialSeries::to_polynomial() const {
  RationalPolynomial out(m);
  RationalPolynomial power = RationalPolynomial::constant(m, Rational(1));
  const RationalPolynomial xv = RationalPolynomial::vector_variable(m);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) power = power * xv;
    if (!coeffs[j].is_zero()) out += power * axis_polynomial(m, coeffs[j]);
  }
  return out;
}

AxialSeries AxialSeries::dirac_image() const {
  AxialSeries d{m, {}, order, exact};
  const int n = static_cast<int>(coeffs.size());
  for (int j = 0; j < n; ++j) {
    LaurentPoly g = coeffs[j].derivative();
    if (j + 1 < n) g -= coeffs[j + 1].scaled(Rational(gck_divisor(m, j + 1)));
    d.coeffs.push_back(std::move(g));
  }
  return d;
}

AxialSeries AxialSeries::scaled(const Rational& s) const {
  AxialSeries r{m, {}, order, exact};
  for (const auto& c : coeffs) r.coeffs.push_back(c.scaled(s));
  return r;
}

bool operator==(const AxialSeries& a, const AxialSeries& b) {
  if (a.m != b.m) return false;
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly za = j < a.coeffs.size() ? a.coeffs[j] : LaurentPoly();
    const LaurentPoly zb = j < b.coeffs.size() ? b.coeffs[j] : LaurentPoly();
    if (za != zb) return false;
  }
  return true;
}

int gck_divisor(int m, int j) {
  if (j <= 0) throw DomainError("GCK divisor index must be positive");
  return j % 2 == 0 ? j : m + j - 1;
}

int gck_default_order(const LaurentPoly& f0, int m) {
  if (f0.is_zero()) return 0;
  if (f0.is_polynomial()) return f0.max_exponent();
  const int top = std::max(f0.max_exponent(), 0);
  const int n = -f0.min_exponent();
  // t_j = C(n+j-1, j) 2^{-j}, normalized by sum_j t_j = 2^n.
  std::vector<double> t;
  double term = std::ldexp(1.0, -n);
  for (int j = 0; j < 4000 && (j < 2 * n + 4 || term > 1e-30); ++j) {
    t.push_back(term);
    term *= static_cast<double>(n + j) / (2.0 * (j + 1));
  }
  double tail = 0.0;
  int n_tail = static_cast<int>(t.size()) - 1;
  for (int j = static_cast<int>(t.size()) - 1; j >= 1; --j) {
    tail += t[j];
    if (tail >= 1e-12) break;
    n_tail = j - 1;
  }
  return std::max({top, 2 * m + 8, n_tail});
}

AxialSeries gck_extension(const LaurentPoly& f0, int m, int order) {
  if (m < 1) throw DimensionMismatch("dimension must be positive");
  if (order < 0) throw DomainError("GCK order must be non-negative");
  AxialSeries s{m, {f0}, order, false};
  for (int j = 1; j <= order; ++j)
    s.coeffs.push_back(s.coeffs.back().derivative().scaled(Rational(1, gck_divisor(m, j))));
  s.exact = s.coeffs.back().derivative().is_zero();
  return s;
}

AxialSeries gck_extension(const LaurentPoly& f0, int m) { return gck_extension(f0, m, gck_default_order(f0, m)); }

AxialSeries gck_bessel_form(const LaurentPoly& f0, int m) {
  if (!f0.is_polynomial()) throw Unsupported("Bessel form needs a terminating (polynomial) input");
  const int deg = f0.is_zero() ? 0 : f0.max_exponent();
  const PiScalar gamma_m2 = gamma_half(m);  // Gamma(m/2)
  AxialSeries s{m, {}, deg, true};
  for (int j = 0; j <= deg; ++j) {
    const int k = j / 2;
    // Even j: Gamma(m/2) / (4^k k! Gamma(k + m/2)), from J_{m/2-1}.
    // Odd j: Gamma(m/2) / (2 4^k k! Gamma(k + 1 + m/2)), from J_{m/2}.
    PiScalar denom(factorial(k) * rational_pow(Rational(4), k), 0);
    if (j % 2 == 0) {
      denom = denom * gamma_half(2 * k + m);
    } else {
      denom = denom * PiScalar(Rational(2), 0) * gamma_half(2 * k + 2 + m);
    }
    const PiScalar w = gamma_m2 / denom;
    if (!w.is_algebraic() || !w.is_real()) throw DomainError("Bessel weight did not reduce to a rational");
    s.coeffs.push_back(f0.derivative(j).scaled(w.coeff.re));
  }
  return s;
}

SliceExtension::SliceExtension(LaurentPoly f0, int m) : f0_(std::move(f0)), m_(m) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
}

void SliceExtension::check_domain(double x0, double r) const {
  if (f0_.is_polynomial()) return;
  if (x0 == 0.0) throw DomainError("slice extension of negative powers at x_0 = 0");
  if (!(r < std::abs(x0))) throw DomainError("slice extension series needs |x_vec| < |x_0|");
}

AxialValue SliceExtension::evaluate_axial(double x0, double r) const {
  check_domain(x0, r);
  const std::complex<double> w = f0_.evaluate(std::complex<double>(x0, r));
  return {w.real(), w.imag()};
}

Multivector<double> SliceExtension::evaluate(double x0, const std::vector<double>& xv) const {
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  return axial_to_multivector(m_, evaluate_axial(x0, std::sqrt(r2)), xv);
}

Multivector<double> SliceExtension::evaluate_series(double x0, const std::vector<double>& xv, int order) const {
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  const double r = std::sqrt(r2);
  check_domain(x0, r);
  AxialValue v;
  double inv_fact = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) inv_fact /= j;
    const double f = f0_.derivative(j).evaluate(x0) * inv_fact * vector_power_factor(j, r);
    if (j % 2 == 0) {
      v.A += f;
    } else {
      v.B += f * r;
    }
  }
  return axial_to_multivector(m_, v, xv);
}

RationalPolynomial SliceExtension::to_polynomial() const {
  if (!f0_.is_polynomial()) throw Unsupported("slice extension of negative powers is not a polynomial");
  RationalPolynomial out(m_);
  for (const auto& [n, c] : f0_.terms()) out += paravector_power(m_, n).scaled(c);
  return out;
}

SliceExtension slice_extension(const LaurentPoly& f0, int m) { return SliceExtension(f0, m); }

IntrinsicPair intrinsic_split(const LaurentPoly& f0, int order) {
  IntrinsicPair pair;
  pair.exact = f0.is_polynomial();
  if (order < 0) order = gck_default_order(f0, 1);
  if (pair.exact) order = f0.is_zero() ? 0 : f0.max_exponent();
  LaurentPoly d = f0;
  Rational inv_fact(1);
  for (int j = 0; j <= order; ++j) {
    if (j > 0) {
      d = d.derivative();
      inv_fact /= j;
    }
    const Rational sign = (j / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    BiPoly& target = j % 2 == 0 ? pair.alpha : pair.beta;
    for (const auto& [n, c] : d.terms()) target.add_term(n, j, c * inv_fact * sign);
  }
  return pair;
}

Rational appell_T(int m, int k, int j) {
  if (j < 0 || j > k) throw DomainError("Appell index out of range");
  return factorial(k) / pochhammer(Rational(m), k) * pochhammer(make_rational(m + 1, 2), k - j) *
         pochhammer(make_rational(m - 1, 2), j) / (factorial(k - j) * factorial(j));
}

RationalPolynomial appell_Q(int m, int k) {
  if (k < 0) throw DomainError("Appell degree must be non-negative");
  return gck_extension(LaurentPoly::monomial(k), m, k).to_polynomial();
}

RationalPolynomial appell_T_sum(int m, int k) {
  RationalPolynomial out(m);
  for (int j = 0; j <= k; ++j)
    out += (paravector_power(m, k - j) * conj_paravector_power(m, j)).scaled(appell_T(m, k, j));
  return out;
}

RationalPolynomial appell_T_sum_printed(int m, int k) {
  RationalPolynomial out(m);
  for (int j = 0; j <= k; ++j)
    out += (conj_paravector_power(m, k - j) * paravector_power(m, j)).scaled(appell_T(m, k, j));
  return out;
}

LaurentPoly restrict_to_axis(const RationalPolynomial& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.restrict_axis()) {
    if (!c.is_scalar()) throw Unsupported("axis restriction has non-scalar coefficients");
    out.add_term(n, c.scalar_part());
  }
  return out;
}

}  // namespace fsq
