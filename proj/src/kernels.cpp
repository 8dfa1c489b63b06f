#include "fsq/kernels.hpp"

#include <cmath>
#include <set>

namespace fsq {

namespace {

double sign_factor(double x0, int power) {
  if (power % 2 == 0) return 1.0;
  return x0 < 0.0 ? -1.0 : 1.0;
}

/// Max |a_n - b_n| over exponents.
double laurent_diff(const LaurentPoly& a, const LaurentPoly& b) {
  double d = 0.0;
  const auto diff = a - b;
  for (const auto& [n, c] : diff.terms()) d = std::max(d, std::abs(c.get_d()));
  return d;
}

/// 0 when the scaled polynomials agree exactly, otherwise the largest coefficient gap.
double scaled_poly_residual(const ScaledPolynomial& a, const ScaledPolynomial& b) {
  if (a == b) return 0.0;
  std::set<Monomial> keys;
  for (const auto& [mo, c] : a.poly.terms()) keys.insert(mo);
  for (const auto& [mo, c] : b.poly.terms()) keys.insert(mo);
  const ComplexDouble sa = a.scale.value();
  const ComplexDouble sb = b.scale.value();
  double d = 0.0;
  for (const auto& mo : keys) {
    const auto ca = to_complex(a.poly.coeff(mo));
    const auto cb = to_complex(b.poly.coeff(mo));
    std::vector<Blade> blades;
    for (const auto& [bl, v] : ca.terms()) blades.push_back(bl);
    for (const auto& [bl, v] : cb.terms()) blades.push_back(bl);
    for (Blade bl : blades) d = std::max(d, std::abs(sa * ca.coeff(bl) - sb * cb.coeff(bl)));
  }
  // Exact mismatch that rounds to zero still has to fail.
  return d > 0.0 ? d : 1e-300;
}

}  // namespace

std::pair<ComplexDouble, ComplexDouble> AxialClosedForm::evaluate_axial_complex(double x0, double r) const {
  const ComplexDouble s = scale.value() * sign_factor(x0, sign_power);
  return {s * A.evaluate(x0, r), s * B.evaluate(x0, r)};
}

AxialValue AxialClosedForm::evaluate_axial(double x0, double r) const {
  if (!scale.is_real()) throw Unsupported("closed form has a complex scale; use evaluate_axial_complex");
  const double s = scale.real_value() * sign_factor(x0, sign_power);
  return {s * A.evaluate(x0, r), s * B.evaluate(x0, r)};
}

Multivector<double> AxialClosedForm::evaluate(double x0, const std::vector<double>& xv) const {
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  return axial_to_multivector(m, evaluate_axial(x0, std::sqrt(r2)), xv);
}

AxialClosedForm AxialClosedForm::d_x0() const {
  AxialClosedForm r = *this;
  r.A = A.d_x0();
  r.B = B.d_x0();
  return r;
}

ScaledPolynomial ScaledPolynomial::normalized() const {
  if (scale.is_algebraic() && scale.is_real()) return {PiScalar(Rational(1), 0), poly.scaled(scale.coeff.re)};
  return *this;
}

bool operator==(const ScaledPolynomial& a, const ScaledPolynomial& b) {
  const bool za = a.poly.is_zero() || a.scale.is_zero();
  const bool zb = b.poly.is_zero() || b.scale.is_zero();
  if (za || zb) return za && zb;
  const PiScalar ratio = a.scale / b.scale;
  if (!ratio.is_algebraic() || !ratio.is_real()) return false;
  return a.poly.scaled(ratio.coeff.re) == b.poly;
}

AxialClosedForm cauchy_kernel(int m) {
  AxialClosedForm e;
  e.m = m;
  e.scale = PiScalar(Rational(1), 0) / sphere_area(m + 1);
  e.A = RadialExpr::term(1, 0, -(m + 1));
  e.B = RadialExpr::term(0, 1, -(m + 1), Rational(-1));
  return e;
}

// conj(x)/|x|^{m+1} (A' - w B') with A' = A(x0/rho, r/rho):
// A_new = rho^{-(m+1)/2} (x0 A' - r B'), B_new = -rho^{-(m+1)/2} (x0 B' + r A').
AxialClosedForm kelvin_inversion(const AxialClosedForm& f) {
  const RadialExpr a = f.A.kelvin_substitute();
  const RadialExpr b = f.B.kelvin_substitute();
  const RadialExpr x0 = RadialExpr::term(1, 0, 0);
  const RadialExpr r = RadialExpr::term(0, 1, 0);
  const RadialExpr w = RadialExpr::term(0, 0, -(f.m + 1));
  AxialClosedForm out = f;
  out.A = w * (x0 * a - r * b);
  out.B = (w * (x0 * b + r * a)).scaled(Rational(-1));
  return out;
}

Multivector<double> kelvin_inversion(const PointFunction& f, int m, double x0, const std::vector<double>& xv) {
  double rho = x0 * x0;
  for (double x : xv) rho += x * x;
  if (rho == 0.0) throw DomainError("Kelvin inversion at the origin");
  std::vector<double> yv(xv.size());
  for (std::size_t j = 0; j < xv.size(); ++j) yv[j] = -xv[j] / rho;
  const Multivector<double> inner = f(x0 / rho, yv);
  std::vector<double> cv(xv.size());
  const double w = 1.0 / std::pow(rho, 0.5 * (m + 1));
  for (std::size_t j = 0; j < xv.size(); ++j) cv[j] = -xv[j] * w;
  Paravector<double> cx{x0 * w, cv};
  return cx.to_multivector() * inner;
}

MonogenicMonomial monogenic_monomial(int m, int order) {
  if (m < 1) throw DimensionMismatch("dimension must be positive");
  if (order < 0) {
    const int k = -order;
    AxialClosedForm p;
    p.m = m;
    p.A = RadialExpr::term(1, 0, -(m + 1));
    p.B = RadialExpr::term(0, 1, -(m + 1), Rational(-1));
    for (int i = 0; i < k - 1; ++i) p = p.d_x0();
    // sigma_{m+1} cancels against the 1/sigma_{m+1} of E.
    const Rational sign = (k - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    p.scale = constants(m).lambda_m * PiScalar(sign / factorial(k - 1), 0);
    return {order, m, p};
  }
  const MonogenicMonomial neg = monogenic_monomial(m, -(order + 1));
  return {order, m, kelvin_inversion(neg.closed_form)};
}

RationalPolynomial radial_polynomial(int m, const BiPoly& even_in_r) {
  RationalPolynomial out(m);
  std::vector<RationalPolynomial> r2_powers{RationalPolynomial::constant(m, Rational(1))};
  const RationalPolynomial r2 = RationalPolynomial::radius_squared(m);
  for (const auto& [key, c] : even_in_r.terms()) {
    const auto [a, b] = key;
    if (a < 0 || b % 2 != 0) throw Unsupported("radial polynomial must be even in r with a >= 0");
    while (static_cast<int>(r2_powers.size()) <= b / 2) r2_powers.push_back(r2_powers.back() * r2);
    RationalPolynomial xa(m);
    xa.add_term(Monomial::unit(0, a), Multivector<Rational>::scalar(m, c));
    out += xa * r2_powers[b / 2];
  }
  return out;
}

ScaledPolynomial closed_form_to_polynomial(const AxialClosedForm& f) {
  if (f.sign_power % 2 != 0) throw Unsupported("odd sign factor is not polynomial");
  BiPoly pa, pb;
  if (!f.A.to_bipoly(pa) || !pa.is_v_even()) throw Unsupported("A is not a polynomial in (x_0, r^2)");
  if (!f.B.to_bipoly(pb) || !(pb.is_zero() || pb.is_v_odd())) throw Unsupported("B is not r times a polynomial in (x_0, r^2)");
  BiPoly h;
  for (const auto& [key, c] : pb.terms()) h.add_term(key.first, key.second - 1, c);
  const int m = f.m;
  RationalPolynomial poly = radial_polynomial(m, pa) + RationalPolynomial::vector_variable(m) * radial_polynomial(m, h);
  return {f.scale, poly};
}

PiScalar prop45_constant(int m, int k) {
  return constants(m).lambda_m * PiScalar(factorial(m + k - 2) / (factorial(k - 1) * factorial(m - 1)), 0);
}

double axial_max_diff(const std::function<std::pair<ComplexDouble, ComplexDouble>(double, double)>& f,
                      const std::function<std::pair<ComplexDouble, ComplexDouble>(double, double)>& g,
                      const std::vector<std::pair<double, double>>& points) {
  double d = 0.0;
  for (const auto& [x0, r] : points) {
    const auto a = f(x0, r);
    const auto b = g(x0, r);
    d = std::max({d, std::abs(a.first - b.first), std::abs(a.second - b.second)});
  }
  return d;
}

std::vector<ReportEntry> verify_prop45(int m, int k, int order, double ratio, double tol) {
  if (m < 1 || k < 1) throw DomainError("prop45 needs m, k >= 1");
  std::vector<ReportEntry> out;
  const DimensionConstants dc = constants(m);
  const PiScalar c = prop45_constant(m, k);
  const AxialClosedForm pneg = monogenic_monomial(m, -k).closed_form;
  const AxialClosedForm ppos = monogenic_monomial(m, k - 1).closed_form;

  // Axis restriction of P^{(-k)}: c sgn(x_0)^{m-1} x_0^{-k-m+1}.
  {
    const auto [even, odd] = pneg.A.restrict_axis();
    const PiScalar rel = c / pneg.scale;
    const LaurentPoly expected = LaurentPoly::monomial(-k - m + 1, rel.coeff.re);
    const LaurentPoly zero;
    const bool sgn_odd = (m - 1) % 2 != 0;
    double res = laurent_diff(sgn_odd ? odd : even, expected) + laurent_diff(sgn_odd ? even : odd, zero);
    if (!rel.is_algebraic() || !rel.is_real()) res = 1.0;
    out.push_back({"prop45.restriction", "P^(-k)|_{x=0} = c sgn(x0)^(m-1) x0^(-k-m+1)", m, k, true, res, 0.0});
  }

  std::vector<std::pair<double, double>> pts;
  for (double x0 : {1.0, -1.0, 2.0, -2.0}) pts.emplace_back(x0, ratio * std::abs(x0));
  auto lhs = [&](double x0, double r) { return pneg.evaluate_axial_complex(x0, r); };

  {
    const LaurentPoly f = LaurentPoly::monomial(-k - m + 1);
    const AxialSeries s = order < 0 ? gck_extension(f, m) : gck_extension(f, m, order);
    const ComplexDouble cv = c.value();
    auto rhs = [&](double x0, double r) {
      const AxialValue v = s.evaluate_axial(x0, r);
      const double sg = sign_factor(x0, m - 1);
      return std::pair<ComplexDouble, ComplexDouble>{cv * sg * v.A, cv * sg * v.B};
    };
    out.push_back({"prop45.negative_gck", "P^(-k) = c sgn(x0)^(m-1) GCK[x0^(-k-m+1)], truncated GCK", m, k, false,
                   axial_max_diff(lhs, rhs, pts), tol});
  }
  {
    const LaurentPoly f = LaurentPoly::monomial(-k).derivative(m - 1);
    const AxialSeries s = order < 0 ? gck_extension(f, m) : gck_extension(f, m, order);
    const ComplexDouble cv = (dc.lambda_m / PiScalar(factorial(m - 1), 0)).value();
    auto rhs = [&](double x0, double r) {
      const AxialValue v = s.evaluate_axial(x0, r);
      const double sg = sign_factor(-x0, m - 1);
      return std::pair<ComplexDouble, ComplexDouble>{cv * sg * v.A, cv * sg * v.B};
    };
    out.push_back({"prop45.negative_gck_derivative",
                   "P^(-k) = lambda_m/(m-1)! sgn(-x0)^(m-1) GCK[d^(m-1) x0^(-k)], truncated GCK", m, k, false,
                   axial_max_diff(lhs, rhs, pts), tol});
  }
  const ScaledPolynomial ppoly = closed_form_to_polynomial(ppos);
  {
    const ScaledPolynomial rhs{c, appell_Q(m, k - 1)};
    out.push_back({"prop45.positive_gck", "P^(k-1) = c GCK[x0^(k-1)]", m, k, true, scaled_poly_residual(ppoly, rhs), 0.0});
  }
  {
    const LaurentPoly f = LaurentPoly::monomial(m + k - 2).derivative(m - 1);
    const ScaledPolynomial rhs{dc.lambda_m / PiScalar(factorial(m - 1), 0), gck_extension(f, m, k - 1).to_polynomial()};
    out.push_back({"prop45.positive_gck_derivative", "P^(k-1) = lambda_m/(m-1)! GCK[d^(m-1) x0^(m+k-2)]", m, k, true,
                   scaled_poly_residual(ppoly, rhs), 0.0});
  }
  return out;
}

}  // namespace fsq
