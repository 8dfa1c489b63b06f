#include "fsq/sphere.hpp"

#include <Eigen/Eigenvalues>
#include <charconv>
#include <numbers>
#include <random>

namespace fsq {

std::string SphereRule::to_string() const {
  switch (kind) {
    case SphereRuleKind::ExactMonomial: return "exact";
    case SphereRuleKind::ProductGauss: return "gauss:" + std::to_string(level);
    case SphereRuleKind::MonteCarlo: return "mc:" + std::to_string(samples) + ":" + std::to_string(seed);
  }
  return "unknown";
}

namespace {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("bad ") + what + " in sphere rule: '" + std::string(text) + "'");
  return v;
}

}  // namespace

SphereRule SphereRule::parse(const std::string& text) {
  if (text == "exact") return exact();
  if (text.rfind("gauss:", 0) == 0) {
    const int level = parse_number<int>(std::string_view(text).substr(6), "level");
    if (level < 0) throw std::invalid_argument("gauss level must be >= 0");
    return gauss(level);
  }
  if (text.rfind("mc:", 0) == 0) {
    const std::string_view rest = std::string_view(text).substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("Monte Carlo rule needs mc:N:SEED");
    const auto n = parse_number<std::size_t>(rest.substr(0, colon), "sample count");
    const auto seed = parse_number<std::uint64_t>(rest.substr(colon + 1), "seed");
    if (n == 0) throw std::invalid_argument("Monte Carlo rule needs at least one sample");
    return monte_carlo(n, seed);
  }
  throw std::invalid_argument("unknown sphere rule '" + text + "' (expected exact, gauss:L or mc:N:SEED)");
}

namespace {

GaussRule golub_welsch(int n, const std::function<double(int)>& offdiag_sq, double mu0) {
  if (n < 1) throw DomainError("Gauss rule needs at least one node");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(offdiag_sq(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw DomainError("Golub-Welsch eigen solve failed");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

GaussRule gauss_gegenbauer(int n, double lambda) {
  if (!(lambda > -1.0)) throw DomainError("Gegenbauer weight needs lambda > -1");
  const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(lambda + 1.0) / std::tgamma(lambda + 1.5);
  return golub_welsch(
      n,
      [lambda](int k) {
        return k * (k + 2.0 * lambda) / ((2.0 * k + 2.0 * lambda + 1.0) * (2.0 * k + 2.0 * lambda - 1.0));
      },
      mu0);
}

GaussRule gauss_hermite(int n) {
  return golub_welsch(n, [](int k) { return k / 2.0; }, std::sqrt(std::numbers::pi));
}

SphereNodes sphere_nodes(const SphereRule& rule, int m) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  SphereNodes out;
  out.m = m;
  const double sigma = sphere_area(m).real_value();
  switch (rule.kind) {
    case SphereRuleKind::ExactMonomial:
      throw Unsupported("the exact monomial rule has no quadrature nodes; it needs polynomial input");
    case SphereRuleKind::MonteCarlo: {
      if (rule.samples == 0) throw DomainError("Monte Carlo rule needs at least one sample");
      std::mt19937_64 rng(rule.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      out.points.reserve(rule.samples * m);
      std::vector<double> g(m);
      for (std::size_t i = 0; i < rule.samples; ++i) {
        double r2 = 0.0;
        do {
          r2 = 0.0;
          for (auto& x : g) {
            x = normal(rng);
            r2 += x * x;
          }
        } while (r2 == 0.0);
        const double inv = 1.0 / std::sqrt(r2);
        for (double x : g) out.points.push_back(x * inv);
      }
      out.weights.assign(rule.samples, sigma / static_cast<double>(rule.samples));
      return out;
    }
    case SphereRuleKind::ProductGauss:
      break;
  }
  if (rule.level < 0) throw DomainError("gauss level must be >= 0");
  if (m == 1) {
    out.points = {1.0, -1.0};
    out.weights = {1.0, 1.0};
    return out;
  }
  const int nt = rule.level + 1;
  const int nphi = 2 * rule.level + 2;
  // Partial nodes: leading coordinates, the remaining radius and the weight so far.
  struct Partial {
    std::vector<double> coords;
    double radius;
    double weight;
  };
  std::vector<Partial> partial{{{}, 1.0, 1.0}};
  for (int i = 1; i <= m - 2; ++i) {
    const GaussRule g = gauss_gegenbauer(nt, (m - 2 - i) / 2.0);
    std::vector<Partial> next;
    next.reserve(partial.size() * g.nodes.size());
    for (const auto& p : partial)
      for (std::size_t q = 0; q < g.nodes.size(); ++q) {
        const double t = g.nodes[q];
        Partial n = p;
        n.coords.push_back(p.radius * t);
        n.radius = p.radius * std::sqrt(std::max(0.0, 1.0 - t * t));
        n.weight = p.weight * g.weights[q];
        next.push_back(std::move(n));
      }
    partial = std::move(next);
  }
  const double dphi = 2.0 * std::numbers::pi / nphi;
  for (const auto& p : partial)
    for (int q = 0; q < nphi; ++q) {
      const double phi = q * dphi;
      out.points.insert(out.points.end(), p.coords.begin(), p.coords.end());
      out.points.push_back(p.radius * std::cos(phi));
      out.points.push_back(p.radius * std::sin(phi));
      out.weights.push_back(p.weight * dphi);
    }
  return out;
}

PiScalar sphere_monomial_integral(const std::vector<int>& a) {
  int total = 0;
  PiScalar num(Rational(2), 0);
  for (int e : a) {
    if (e < 0) throw DomainError("sphere monomial exponents must be >= 0");
    if (e % 2 != 0) return PiScalar(Rational(0), 0);
    num = num * gamma_half(e + 1);
    total += e + 1;
  }
  if (a.empty()) throw DimensionMismatch("sphere monomial needs at least one coordinate");
  return num / gamma_half(total);
}

Rational sphere_monomial_average(const std::vector<int>& a) {
  const PiScalar q = sphere_monomial_integral(a) / sphere_area(static_cast<int>(a.size()));
  if (q.is_zero()) return Rational(0);
  if (!q.is_algebraic() || !q.is_real()) throw DomainError("sphere monomial average is not rational");
  return q.coeff.re;
}

namespace {

std::vector<int> omega_exponents(const Monomial& mo, int m) {
  std::vector<int> a(m);
  for (int j = 1; j <= m; ++j) a[j - 1] = mo.e[j];
  return a;
}

/// Calls f(b) for every composition b_1 + ... + b_m = total.
void for_each_composition(int m, int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> b(m, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      b[j] = left;
      f(b);
      return;
    }
    for (int v = left; v >= 0; --v) {
      b[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, total);
}

/// Adds (1 / sigma_m) int x_0^{a0} <x, w>^E w^beta c dS to out, expanding <x, w>^E
/// with the multinomial theorem.
void add_plane_wave_average(RationalPolynomial& out, int m, int a0, int E, const std::vector<int>& beta,
                            const Multivector<Rational>& c) {
  const Rational eFact = factorial(E);
  for_each_composition(m, E, [&](const std::vector<int>& b) {
    std::vector<int> a(m);
    Rational coef = eFact;
    Monomial mo = Monomial::unit(0, a0);
    for (int j = 0; j < m; ++j) {
      a[j] = beta[j] + b[j];
      coef /= factorial(b[j]);
      mo.e[j + 1] = static_cast<std::uint8_t>(b[j]);
    }
    const Rational avg = sphere_monomial_average(a);
    if (!fsq::is_zero(avg)) out.add_term(mo, c.scaled(coef * avg));
  });
}

}  // namespace

ExactSphereIntegral sphere_integrate_exact(const RationalPolynomial& p) {
  const int m = p.dim();
  ExactSphereIntegral out{sphere_area(m), Multivector<Rational>(m)};
  for (const auto& [mo, c] : p.terms()) {
    if (mo.e[0] != 0) throw DomainError("omega-polynomials use the slots x_1..x_m only");
    out.average += c.scaled(sphere_monomial_average(omega_exponents(mo, m)));
  }
  return out;
}

NumericIntegral<double> sphere_integrate(const RationalPolynomial& p, const SphereRule& rule) {
  if (!rule.is_numeric()) return {sphere_integrate_exact(p).value(), 0.0};
  const int m = p.dim();
  for (const auto& [mo, c] : p.terms())
    if (mo.e[0] != 0) throw DomainError("omega-polynomials use the slots x_1..x_m only");
  const CliffordPolynomial<double> pd = to_double(p);
  return sphere_quadrature<double>(
      [&](const std::vector<double>& w) { return pd.evaluate(Paravector<double>{0.0, w}); }, m, rule);
}

FunkHeckeConstants funk_hecke_constants(int m, int j) {
  if (j < 0) throw DomainError("Funk-Hecke constants need j >= 0");
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  RationalPolynomial c0(m), c1(m);
  const std::vector<int> none(m, 0);
  add_plane_wave_average(c0, m, 0, j, none, Multivector<Rational>::scalar(m, Rational(1)));
  for (int k = 1; k <= m; ++k) {
    std::vector<int> beta(m, 0);
    beta[k - 1] = 1;
    add_plane_wave_average(c1, m, 0, j, beta, Multivector<Rational>::generator(m, k));
  }
  const PiScalar sigma = sphere_area(m);
  const Monomial x1j = Monomial::unit(1, j);
  FunkHeckeConstants out;
  out.C0 = sigma * PiScalar(c0.coeff(x1j).scalar_part(), 0);
  out.C1 = sigma * PiScalar(c1.coeff(x1j).coeff(Blade::generator(1)), 0);
  return out;
}

RationalPolynomial dual_radon(const RationalPolynomial& f) {
  const int m = f.dim();
  RationalPolynomial out(m);
  for (const auto& [mo, c] : f.terms()) {
    const std::vector<int> beta = omega_exponents(mo, m);
    int E = 0;
    for (int b : beta) E += b;
    add_plane_wave_average(out, m, mo.e[0], E, beta, c);
  }
  return out;
}

NumericIntegral<ComplexDouble> dual_radon(const SliceEvaluator& f, int m, double x0, const std::vector<double>& xv,
                                          const SphereRule& rule) {
  if (static_cast<int>(xv.size()) != m) throw DimensionMismatch("point has wrong dimension");
  auto integrand = [&](const std::vector<double>& w) {
    double t = 0.0;
    for (int j = 0; j < m; ++j) t += xv[j] * w[j];
    auto [alpha, beta] = f(x0, t);
    const Multivector<ComplexDouble> wv =
        to_complex(Multivector<double>::vector(m, std::span<const double>(w.data(), w.size())));
    return alpha + wv * beta;
  };
  NumericIntegral<ComplexDouble> out = sphere_quadrature<ComplexDouble>(integrand, m, rule);
  const double inv = 1.0 / sphere_area(m).real_value();
  out.value = out.value.scaled(ComplexDouble(inv, 0.0));
  out.std_error *= inv;
  return out;
}

SliceEvaluator slice_evaluator(const LaurentPoly& f0, int m) {
  return [f0, m](double x0, double t) {
    const ComplexDouble z = f0.evaluate(ComplexDouble(x0, t));
    return std::pair{Multivector<ComplexDouble>::scalar(m, ComplexDouble(z.real(), 0.0)),
                     Multivector<ComplexDouble>::scalar(m, ComplexDouble(z.imag(), 0.0))};
  };
}

namespace {

double vector_norm(const std::vector<double>& xv) {
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  return std::sqrt(r2);
}

double exact_mismatch_residual(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a == b) return 0.0;
  double r = 0.0;
  const RationalPolynomial diff = a - b;
  for (const auto& [mo, c] : diff.terms()) r = std::max(r, c.norm());
  return r > 0.0 ? r : 1e-300;
}

std::string point_string(double x0, const std::vector<double>& xv) {
  std::string s = "(" + std::to_string(x0);
  for (double x : xv) s += ", " + std::to_string(x);
  return s + ")";
}

}  // namespace

ReportEntry plane_wave_gck_check(const LaurentPoly& f0, int m, const SphereRule& rule, double x0,
                                 const std::vector<double>& xv, double tol) {
  ReportEntry e;
  e.identity = "plane_wave_gck";
  e.m = m;
  e.k = f0.is_zero() ? 0 : f0.max_exponent();
  if (!rule.is_numeric()) {
    if (!f0.is_polynomial()) throw Unsupported("the exact rule needs a polynomial f_0");
    e.anchor = "R[S[f0]] == GCK[f0] symbolically";
    e.exact = true;
    const RationalPolynomial lhs = dual_radon(slice_extension(f0, m).to_polynomial());
    const RationalPolynomial rhs = gck_extension(f0, m).to_polynomial();
    e.residual = exact_mismatch_residual(lhs, rhs);
    return e;
  }
  std::vector<double> point = xv;
  if (point.empty()) point.assign(m, 0.3 / std::sqrt(static_cast<double>(m)));
  if (static_cast<int>(point.size()) != m) throw DimensionMismatch("point has wrong dimension");
  e.anchor = "R[S[f0]] vs GCK[f0] at " + point_string(x0, point) + " with rule " + rule.to_string();
  e.exact = false;
  e.tolerance = tol;
  const auto lhs = dual_radon(slice_evaluator(f0, m), m, x0, point, rule);
  const Multivector<ComplexDouble> rhs = to_complex(gck_extension(f0, m).evaluate(x0, point));
  e.residual = max_abs_diff(lhs.value, rhs);
  return e;
}

namespace {

/// sgn(x_0)^{m+1} / sigma_m int (x_0 + <x, w> w)^{-p} dS, the power taken in span{1, w}.
Multivector<double> negative_power_average(int m, int p, double x0, const std::vector<double>& xv,
                                           const SphereRule& rule) {
  if (!rule.is_numeric()) throw Unsupported("plane wave decompositions of negative powers need a numeric rule");
  if (static_cast<int>(xv.size()) != m) throw DimensionMismatch("point has wrong dimension");
  if (!(vector_norm(xv) < std::abs(x0))) throw DomainError("plane wave decomposition needs |x_vec| < |x_0|");
  const LaurentPoly f = LaurentPoly::monomial(-p);
  const auto avg = dual_radon(slice_evaluator(f, m), m, x0, xv, rule);
  const double sgn = (x0 < 0 && (m + 1) % 2 == 1) ? -1.0 : 1.0;
  return convert<double>(avg.value, [&](const ComplexDouble& z) { return sgn * z.real(); });
}

}  // namespace

ReportEntry cauchy_plane_wave_check(int m, double x0, const std::vector<double>& xv, const SphereRule& rule,
                                    double tol) {
  ReportEntry e;
  e.identity = "cauchy_plane_wave";
  e.anchor = "E(x) as a sphere average of (x0 + <x,w>w)^{-m} at " + point_string(x0, xv) + " with rule " +
             rule.to_string();
  e.m = m;
  e.k = 1;
  e.exact = false;
  e.tolerance = tol;
  const Multivector<double> lhs =
      negative_power_average(m, m, x0, xv, rule).scaled(1.0 / sphere_area(m + 1).real_value());
  e.residual = max_abs_diff(lhs, cauchy_kernel(m).evaluate(x0, xv));
  return e;
}

ReportEntry monomial_plane_wave_check(int m, int k, double x0, const std::vector<double>& xv, const SphereRule& rule,
                                      double tol) {
  if (k < 1) throw DomainError("P^{(-k)} needs k >= 1");
  ReportEntry e;
  e.identity = "monomial_plane_wave";
  e.anchor = "P^(-k) as a sphere average of (x0 + <x,w>w)^{-k-m+1} at " + point_string(x0, xv) + " with rule " +
             rule.to_string();
  e.m = m;
  e.k = k;
  e.exact = false;
  e.tolerance = tol;
  const Multivector<double> lhs =
      negative_power_average(m, k + m - 1, x0, xv, rule).scaled(prop45_constant(m, k).real_value());
  e.residual = max_abs_diff(lhs, monogenic_monomial(m, -k).closed_form.evaluate(x0, xv));
  return e;
}

}  // namespace fsq
