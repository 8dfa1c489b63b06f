#include "fsq/fueter.hpp"

#include <cmath>

namespace fsq {

std::string to_string(FueterBranch b) {
  switch (b) {
    case FueterBranch::Negative: return "negative";
    case FueterBranch::Kernel: return "kernel";
    case FueterBranch::Positive: return "positive";
  }
  return "unknown";
}

FueterResult tau_on_power(int m, int l, int order) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  const PiScalar gamma = constants(m).gamma_m;
  const PiScalar unit(i_power(1 - m), 0);
  const LaurentPoly f = LaurentPoly::monomial(l).derivative(m - 1);

  FueterResult res;
  res.m = m;
  res.power = l;
  res.scale = gamma;
  if (l >= 0) {
    const int deg = f.is_zero() ? 0 : f.max_exponent();
    ScaledPolynomial out{gamma, gck_extension(f, m, deg).to_polynomial()};
    out = out.normalized();
    res.scale = out.scale;
    res.polynomial = out.poly;
    if (l <= m - 2) {
      res.branch = FueterBranch::Kernel;
      res.cross_check_exact = true;
      res.residual = out.poly.is_zero() ? 0.0 : 1.0;
      return res;
    }
    res.branch = FueterBranch::Positive;
    AxialClosedForm p = monogenic_monomial(m, l + 1 - m).closed_form;
    p.scale = unit * p.scale;
    res.closed_form = p;
    res.cross_check_exact = true;
    res.residual = closed_form_to_polynomial(p) == out ? 0.0 : 1.0;
    return res;
  }

  res.branch = FueterBranch::Negative;
  res.series = order < 0 ? gck_extension(f, m) : gck_extension(f, m, order);
  AxialClosedForm p = monogenic_monomial(m, l).closed_form;
  // sgn(-x_0)^{m-1} = (-1)^{m-1} sgn(x_0)^{m-1}
  p.scale = unit * p.scale * PiScalar((m - 1) % 2 == 0 ? Rational(1) : Rational(-1), 0);
  p.sign_power = m - 1;
  res.closed_form = p;
  res.cross_check_exact = false;
  const ComplexDouble g = gamma.value();
  const AxialSeries& s = *res.series;
  auto lhs = [&](double x0, double r) {
    const AxialValue v = s.evaluate_axial(x0, r);
    return std::pair<ComplexDouble, ComplexDouble>{g * v.A, g * v.B};
  };
  auto rhs = [&](double x0, double r) { return p.evaluate_axial_complex(x0, r); };
  std::vector<std::pair<double, double>> pts;
  for (double x0 : {1.0, -1.0, 1.5, -1.5})
    for (double q : {0.0, 0.25, 0.5}) pts.emplace_back(x0, q * std::abs(x0));
  res.residual = axial_max_diff(lhs, rhs, pts);
  return res;
}

ScaledSeries tau_on_laurent(int m, const LaurentPoly& f0, int order) {
  const LaurentPoly f = f0.derivative(m - 1);
  ScaledSeries out;
  out.scale = constants(m).gamma_m;
  out.series = order < 0 ? gck_extension(f, m) : gck_extension(f, m, order);
  return out;
}

namespace {

/// (x_0 + i r)^n = alpha_n + i beta_n for n >= 0.
std::pair<RadialExpr, RadialExpr> complex_power(int n) {
  RadialExpr alpha, beta;
  for (int j = 0; j <= n; ++j) {
    const Rational c = binomial(n, j);
    const Rational sign = (j / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    if (j % 2 == 0) {
      alpha.add_term(n - j, j, 0, c * sign);
    } else {
      beta.add_term(n - j, j, 0, c * sign);
    }
  }
  return {alpha, beta};
}

}  // namespace

AxialClosedForm slice_closed_form(const LaurentPoly& f0, int m) {
  AxialClosedForm out;
  out.m = m;
  for (const auto& [n, c] : f0.terms()) {
    const int p = std::abs(n);
    auto [alpha, beta] = complex_power(p);
    if (n >= 0) {
      out.A += alpha.scaled(c);
      out.B += beta.scaled(c);
    } else {
      // x^{-p} = conj(x)^p / |x|^{2p} = (alpha_p - w beta_p) rho^{-p}
      out.A += alpha.times_rho_half(-2 * p).scaled(c);
      out.B += beta.times_rho_half(-2 * p).scaled(-c);
    }
  }
  return out;
}

AxialClosedForm axial_laplacian(const AxialClosedForm& f) {
  const int m = f.m;
  AxialClosedForm out = f;
  const RadialExpr ar = f.A.d_r();
  out.A = f.A.d_x0().d_x0() + ar.d_r() + ar.times_r(-1).scaled(Rational(m - 1));
  const RadialExpr h = f.B.times_r(-1);
  const RadialExpr hr = h.d_r();
  out.B = (h.d_x0().d_x0() + hr.d_r() + hr.times_r(-1).scaled(Rational(m + 1))).times_r(1);
  return out;
}

LaplacianRouteResult laplacian_power_route(int m, const LaurentPoly& f0) {
  if (m % 2 == 0) throw Unsupported("the pointwise Laplacian route exists only for odd m");
  const int steps = (m - 1) / 2;
  LaplacianRouteResult res;
  if (f0.is_polynomial()) {
    RationalPolynomial p = slice_extension(f0, m).to_polynomial();
    for (int i = 0; i < steps; ++i) p = apply_operator(OperatorTag::Laplacian, p);
    res.polynomial = p;
    return res;
  }
  AxialClosedForm f = slice_closed_form(f0, m);
  for (int i = 0; i < steps; ++i) f = axial_laplacian(f);
  res.closed_form = f;
  return res;
}

AxialClosedForm lemma41_AB(int m, const IntrinsicPair& pair) {
  if (m % 2 == 0) throw Unsupported("explicit (A, B) formulas need odd m");
  if (!pair.alpha.is_v_even()) throw DomainError("alpha must be even in v");
  if (!pair.beta.is_zero() && !pair.beta.is_v_odd()) throw DomainError("beta must be odd in v");
  BiPoly a = pair.alpha;
  BiPoly b = pair.beta;
  for (int step = 0; step < (m - 1) / 2; ++step) {
    // (r^{-1} d_r): v^{2i} -> 2i v^{2i-2};  (d_r r^{-1}): v^{2i+1} -> 2i v^{2i-1}
    BiPoly na, nb;
    for (const auto& [k, c] : a.terms())
      if (k.second > 0) na.add_term(k.first, k.second - 2, c * k.second);
    for (const auto& [k, c] : b.terms())
      if (k.second > 1) nb.add_term(k.first, k.second - 2, c * (k.second - 1));
    a = std::move(na);
    b = std::move(nb);
  }
  const Rational df = double_factorial(m - 1);
  AxialClosedForm out;
  out.m = m;
  out.A = RadialExpr::from_bipoly(a).scaled(df);
  out.B = RadialExpr::from_bipoly(b).scaled(df);
  return out;
}

}  // namespace fsq
