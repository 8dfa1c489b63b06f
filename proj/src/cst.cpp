#include "fsq/cst.hpp"

#include <cmath>
#include <numbers>

namespace fsq {

namespace {

using Coeff = GaussPoly::Coeff;

ComplexDouble cd(const ComplexRational& z) { return to_complex(z); }

double l1_norm(const ComplexMultivector& v) {
  double s = 0.0;
  for (const auto& [b, c] : v.terms()) s += std::abs(c);
  return s;
}

/// (k-1)!! for even k >= 0, with (-1)!! = 1.
Rational even_moment(int k) { return k == 0 ? Rational(1) : double_factorial(k - 1); }

/// Expands sum_n p_n E[(mu + Z / sqrt(s))^n] with mu = (shift + scale * x) / den,
/// Z standard normal, as a polynomial in x.
std::vector<Coeff> gaussian_average(const std::vector<Coeff>& p, int m, const Rational& s, const ComplexRational& shift,
                                    const ComplexRational& scale, const Rational& den) {
  std::vector<Coeff> out(p.size(), Coeff(m));
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (p[n].is_zero()) continue;
    for (std::size_t k = 0; k <= n; k += 2) {
      // C(n, k) (k-1)!! s^{-k/2} mu^{n-k}
      const Rational w = binomial(static_cast<int>(n), static_cast<int>(k)) * even_moment(static_cast<int>(k)) /
                         rational_pow(s, static_cast<int>(k / 2));
      const int j = static_cast<int>(n - k);
      const Rational inv = Rational(1) / rational_pow(den, j);
      ComplexRational sp(Rational(1));
      std::vector<ComplexRational> shift_pow(j + 1, ComplexRational(Rational(1)));
      for (int i = 1; i <= j; ++i) shift_pow[i] = shift_pow[i - 1] * shift;
      for (int i = 0; i <= j; ++i) {
        // C(j, i) (scale x)^i shift^{j-i}
        const ComplexRational c = ComplexRational(w * inv * binomial(j, i)) * sp * shift_pow[j - i];
        out[i] += p[n].scaled(c);
        sp = sp * scale;
      }
    }
  }
  return out;
}

}  // namespace

ComplexDouble GaussConstant::value() const {
  return cd(mult) / std::sqrt(q.get_d()) * std::exp(cd(exponent)) * std::pow(std::numbers::pi, quarter_pi / 4.0);
}

GaussConstant GaussConstant::operator*(const GaussConstant& o) const {
  return {mult * o.mult, q * o.q, exponent + o.exponent, quarter_pi + o.quarter_pi};
}

bool operator==(const GaussConstant& a, const GaussConstant& b) {
  const bool za = is_zero(a.mult), zb = is_zero(b.mult);
  if (za || zb) return za && zb;
  if (a.quarter_pi != b.quarter_pi || a.exponent != b.exponent) return false;
  // mult_a / sqrt(q_a) == mult_b / sqrt(q_b) iff the squares agree and the ratio is positive.
  if (a.mult * a.mult * ComplexRational(b.q) != b.mult * b.mult * ComplexRational(a.q)) return false;
  const ComplexRational ratio = a.mult * b.mult.conj();
  return is_zero(ratio.im) && sgn(ratio.re) > 0;
}

GaussPoly::GaussPoly(int m, Rational a, ComplexRational b, std::vector<Coeff> poly, GaussConstant c)
    : m_(m), a_(std::move(a)), b_(std::move(b)), poly_(std::move(poly)), c_(std::move(c)) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  if (sgn(a_) <= 0) throw DomainError("GaussPoly needs a Gaussian width a > 0");
  if (sgn(c_.q) <= 0) throw DomainError("GaussPoly constant needs q > 0");
  for (const auto& p : poly_)
    if (p.dim() != m) throw DimensionMismatch("GaussPoly coefficient has the wrong dimension");
  trim();
}

void GaussPoly::trim() {
  while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
}

GaussPoly GaussPoly::hermite(int m, int n) {
  if (n < 0) throw DomainError("Hermite index must be >= 0");
  // H_{k+1} = 2x H_k - 2k H_{k-1}
  std::vector<Rational> prev{Rational(1)}, cur{Rational(1)};
  if (n >= 1) cur = {Rational(0), Rational(2)};
  for (int k = 1; k < n; ++k) {
    std::vector<Rational> next(k + 2, Rational(0));
    for (int i = 0; i <= k; ++i) next[i + 1] += 2 * cur[i];
    for (int i = 0; i < k; ++i) next[i] -= 2 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<Coeff> poly;
  for (const auto& c : cur) poly.push_back(Coeff::scalar(m, ComplexRational(c)));
  GaussConstant gc;
  gc.q = rational_pow(Rational(2), n) * factorial(n);
  gc.quarter_pi = -1;
  return GaussPoly(m, make_rational(1, 2), ComplexRational(Rational(0)), std::move(poly), gc);
}

GaussPoly GaussPoly::gaussian(int m, const Rational& a) {
  return GaussPoly(m, a, ComplexRational(Rational(0)), {Coeff::scalar(m, ComplexRational(Rational(1)))});
}

GaussPoly GaussPoly::derivative(int times) const {
  if (times < 0) throw DomainError("derivative order must be >= 0");
  GaussPoly r = *this;
  for (int t = 0; t < times; ++t) {
    // (p e^{g})' = (p' + (b - 2 a x) p) e^{g}
    const std::size_t n = r.poly_.size();
    std::vector<Coeff> next(n + 1, Coeff(m_));
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) next[k - 1] += r.poly_[k].scaled(ComplexRational(Rational(static_cast<long>(k))));
      next[k] += r.poly_[k].scaled(b_);
      next[k + 1] += r.poly_[k].scaled(ComplexRational(-2 * a_));
    }
    r.poly_ = std::move(next);
    r.trim();
  }
  return r;
}

GaussPoly GaussPoly::times_x() const {
  GaussPoly r = *this;
  if (!r.poly_.empty()) r.poly_.insert(r.poly_.begin(), Coeff(m_));
  return r;
}

GaussPoly GaussPoly::scaled(const ComplexRational& s) const {
  GaussPoly r = *this;
  for (auto& p : r.poly_) p = p.scaled(s);
  r.trim();
  return r;
}

GaussPoly GaussPoly::right_mul(const Coeff& c) const {
  GaussPoly r = *this;
  for (auto& p : r.poly_) p = p * c;
  r.trim();
  return r;
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
  if (m_ != o.m_ || a_ != o.a_ || b_ != o.b_ || !(c_ == o.c_))
    throw DomainError("GaussPoly sums need the same dimension, Gaussian and constant");
  GaussPoly r = *this;
  if (o.poly_.size() > r.poly_.size()) r.poly_.resize(o.poly_.size(), Coeff(m_));
  for (std::size_t k = 0; k < o.poly_.size(); ++k) r.poly_[k] += o.poly_[k];
  r.trim();
  return r;
}

ComplexMultivector GaussPoly::evaluate(ComplexDouble z) const {
  ComplexMultivector acc(m_);
  for (std::size_t k = poly_.size(); k-- > 0;) acc = acc.scaled(z) + to_complex(poly_[k]);
  const ComplexDouble g = -a_.get_d() * z * z + cd(b_) * z;
  return acc.scaled(c_.value() * std::exp(g));
}

std::vector<ComplexMultivector> GaussPoly::taylor(double x0, int order) const {
  if (order < 0) throw DomainError("Taylor order must be >= 0");
  const double a = a_.get_d();
  const ComplexDouble b = cd(b_);
  // Taylor coefficients E_n of e^{g(x0 + h)}: (n+1) E_{n+1} = beta E_n - 2a E_{n-1}.
  std::vector<ComplexDouble> E(order + 1);
  const ComplexDouble beta = -2.0 * a * x0 + b;
  E[0] = c_.value() * std::exp(-a * x0 * x0 + b * x0);
  if (order >= 1) E[1] = beta * E[0];
  for (int n = 1; n < order; ++n) E[n + 1] = (beta * E[n] - 2.0 * a * E[n - 1]) / static_cast<double>(n + 1);
  // Taylor coefficients P_j of p(x0 + h).
  const int deg = static_cast<int>(poly_.size()) - 1;
  std::vector<ComplexMultivector> P(std::max(deg, 0) + 1, ComplexMultivector(m_));
  for (int k = 0; k <= deg; ++k) {
    const ComplexMultivector pk = to_complex(poly_[k]);
    double xp = 1.0;
    for (int j = k; j >= 0; --j) {
      P[j] += pk.scaled(ComplexDouble(binomial(k, j).get_d() * xp, 0.0));
      xp *= x0;
    }
  }
  std::vector<ComplexMultivector> d(order + 1, ComplexMultivector(m_));
  for (int n = 0; n <= order; ++n)
    for (int j = 0; j <= std::min(n, deg); ++j) d[n] += P[j].scaled(E[n - j]);
  return d;
}

double GaussPoly::disc_bound(double x0, double R) const {
  const double a = a_.get_d();
  const ComplexDouble b = cd(b_);
  double poly = 0.0, zp = 1.0;
  for (const auto& p : poly_) {
    poly += l1_norm(to_complex(p)) * zp;
    zp *= std::abs(x0) + R;
  }
  // max of -a u^2 + Re(b) u on [x0 - R, x0 + R]
  const double u = std::clamp(b.real() / (2.0 * a), x0 - R, x0 + R);
  const double g = -a * u * u + b.real() * u + a * R * R + std::abs(b.imag()) * R;
  return std::abs(c_.value()) * poly * std::exp(g);
}

GaussPoly GaussPoly::fourier_transform() const {
  // (1/sqrt(2 pi)) int p(x) e^{-a x^2 + (b - i p) x} dx
  //   = (2a)^{-1/2} e^{(b - i p)^2 / (4a)} E[p(nu + Z / sqrt(2a))],  nu = (b - i p) / (2a).
  const Rational two_a = 2 * a_;
  const ComplexRational minus_i(Rational(0), Rational(-1));
  std::vector<Coeff> poly = gaussian_average(poly_, m_, two_a, b_, minus_i, two_a);
  GaussConstant gc = c_;
  gc.q *= two_a;
  gc.exponent += b_ * b_ / ComplexRational(4 * a_);
  const Rational a_new = Rational(1) / (4 * a_);
  const ComplexRational b_new = minus_i * b_ / ComplexRational(two_a);
  return GaussPoly(m_, a_new, b_new, std::move(poly), gc);
}

bool operator==(const GaussPoly& f, const GaussPoly& g) {
  if (f.poly_.empty() || g.poly_.empty()) return f.poly_.empty() && g.poly_.empty();
  return f.m_ == g.m_ && f.a_ == g.a_ && f.b_ == g.b_ && f.poly_ == g.poly_ && f.c_ == g.c_;
}

GaussPoly heat_semigroup(const GaussPoly& f) {
  const Rational s = 1 + 2 * f.a();
  std::vector<Coeff> poly =
      gaussian_average(f.poly(), f.dim(), s, f.b(), ComplexRational(Rational(1)), s);
  GaussConstant gc = f.constant();
  gc.q *= s;
  gc.exponent += f.b() * f.b() / ComplexRational(2 * s);
  return GaussPoly(f.dim(), f.a() / s, f.b() / ComplexRational(s), std::move(poly), gc);
}

ComplexMultivector heat_semigroup_quadrature(const GaussPoly& f, double x0, int nodes) {
  // y = x0 + sqrt(2) t turns the heat kernel into the Hermite weight.
  const GaussRule gh = gauss_hermite(nodes);
  ComplexMultivector acc(f.dim());
  for (std::size_t i = 0; i < gh.nodes.size(); ++i)
    acc += f.evaluate(x0 + std::numbers::sqrt2 * gh.nodes[i]).scaled(ComplexDouble(gh.weights[i], 0.0));
  return acc.scaled(ComplexDouble(1.0 / std::sqrt(std::numbers::pi), 0.0));
}

ComplexMultivector classical_cst(const GaussPoly& f, ComplexDouble z) { return heat_semigroup(f).evaluate(z); }

ComplexMultivector SliceValue::at(const std::vector<double>& xv) const {
  const int m = alpha.dim();
  if (static_cast<int>(xv.size()) != m) throw DimensionMismatch("point has wrong dimension");
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  if (r2 == 0.0) return alpha;
  const double r = std::sqrt(r2);
  std::vector<double> w(xv);
  for (double& x : w) x /= r;
  return alpha + to_complex(Multivector<double>::vector(m, std::span<const double>(w))) * beta;
}

namespace {

SliceValue slice_from_entire(const GaussPoly& F, double x0, double r) {
  const ComplexMultivector plus = F.evaluate(ComplexDouble(x0, r));
  const ComplexMultivector minus = F.evaluate(ComplexDouble(x0, -r));
  return {(plus + minus).scaled(ComplexDouble(0.5, 0.0)), (plus - minus).scaled(ComplexDouble(0.0, -0.5))};
}

}  // namespace

SliceValue slice_cst(const GaussPoly& f, double x0, double r) { return slice_from_entire(heat_semigroup(f), x0, r); }

SliceValue slice_cst_fourier(const GaussPoly& f, double x0, double r) {
  const GaussPoly ft = f.fourier_transform();
  const double kappa = 0.5 + ft.a().get_d();
  const double growth = std::abs(r) + std::abs(to_complex(ft.b()));
  // Truncate where the Gaussian has decayed by e^{-60}; polynomial growth is covered by the margin.
  const double L = 1.25 * (growth + std::sqrt(growth * growth + 240.0 * kappa)) / (2.0 * kappa) + 2.0;
  const double h = std::min(0.02, 0.25 / std::sqrt(kappa));
  const int n = static_cast<int>(std::ceil(L / h));
  SliceValue out{ComplexMultivector(f.dim()), ComplexMultivector(f.dim())};
  for (int i = -n; i <= n; ++i) {
    const double p = i * h;
    const ComplexMultivector v = ft.evaluate(p);
    const ComplexDouble base = std::exp(ComplexDouble(-0.5 * p * p, p * x0)) * h;
    out.alpha += v.scaled(base * std::cosh(p * r));
    out.beta += v.scaled(base * ComplexDouble(0.0, std::sinh(p * r)));
  }
  const ComplexDouble norm(1.0 / std::sqrt(2.0 * std::numbers::pi), 0.0);
  out.alpha = out.alpha.scaled(norm);
  out.beta = out.beta.scaled(norm);
  return out;
}

SliceEvaluator slice_cst_evaluator(const GaussPoly& f) {
  return [F = heat_semigroup(f)](double x0, double t) {
    SliceValue v = slice_from_entire(F, x0, t);
    return std::pair{std::move(v.alpha), std::move(v.beta)};
  };
}

AxialCstResult gck_of_entire(const GaussPoly& F, double x0, const std::vector<double>& xv, int order, double tol) {
  const int m = F.dim();
  if (static_cast<int>(xv.size()) != m) throw DimensionMismatch("point has wrong dimension");
  double r2 = 0.0;
  for (double x : xv) r2 += x * x;
  const double r = std::sqrt(r2);
  AxialCstResult out;
  if (r == 0.0) {
    out.value = F.evaluate(x0);
    return out;
  }
  std::vector<std::pair<double, double>> radii;  // (R, M(R))
  for (double R : {2 * r, 4 * r, 8 * r, 16 * r, 1.0, 2.0, 4.0})
    if (R > r) radii.emplace_back(R, F.disc_bound(x0, R));
  // Componentwise, |x_vec^j d_j| <= sqrt(m) r^j M / R^j and j! / prod c_i <= 1.
  auto bound = [&](int N) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [R, M] : radii) {
      const double q = r / R;
      best = std::min(best, std::sqrt(static_cast<double>(m)) * M * std::pow(q, N + 1) / (1.0 - q));
    }
    return best;
  };
  constexpr int kMaxOrder = 400;
  int N = order;
  if (N < 0) {
    N = 4;
    while (N < kMaxOrder && !(bound(N) < tol)) ++N;
  }
  out.order = N;
  out.remainder_bound = bound(N);
  if (!(out.remainder_bound < tol))
    throw DomainError("GCK truncation remainder bound " + std::to_string(out.remainder_bound) +
                      " exceeds tolerance " + std::to_string(tol) + " at order " + std::to_string(N) +
                      " (|x_vec| = " + std::to_string(r) + ")");
  const std::vector<ComplexMultivector> d = F.taylor(x0, N);
  const Multivector<double> xvec = Multivector<double>::vector(m, std::span<const double>(xv));
  Multivector<double> power = Multivector<double>::scalar(m, 1.0);
  double ratio = 1.0;  // j! / prod_{i <= j} c_i
  out.value = ComplexMultivector(m);
  for (int j = 0; j <= N; ++j) {
    if (j > 0) {
      power = power * xvec;
      ratio *= static_cast<double>(j) / gck_divisor(m, j);
    }
    out.value += to_complex(power) * d[j].scaled(ComplexDouble(ratio, 0.0));
  }
  return out;
}

AxialCstResult axial_cst(const GaussPoly& f, double x0, const std::vector<double>& xv, int order, double tol) {
  return gck_of_entire(heat_semigroup(f), x0, xv, order, tol);
}

ComplexMultivector axial_cst_radon(const GaussPoly& f, double x0, const std::vector<double>& xv,
                                   const SphereRule& rule) {
  return dual_radon(slice_cst_evaluator(f), f.dim(), x0, xv, rule).value;
}

FueterCstResult fueter_cst(const GaussPoly& f, double x0, const std::vector<double>& xv, const SphereRule& rule,
                           double tol) {
  const int m = f.dim();
  const ComplexDouble gamma = constants(m).gamma_m.value();
  const AxialCstResult direct = gck_of_entire(heat_semigroup(f).derivative(m - 1), x0, xv, -1, tol);
  const GaussPoly df = f.derivative(m - 1);
  const AxialCstResult commuted = axial_cst(df, x0, xv, -1, tol);
  FueterCstResult out;
  out.value = direct.value.scaled(gamma);
  out.via_commuted = commuted.value.scaled(gamma);
  out.via_radon = axial_cst_radon(df, x0, xv, rule).scaled(gamma);
  out.residual_commuted = max_abs_diff(out.value, out.via_commuted);
  out.residual_radon = max_abs_diff(out.value, out.via_radon);
  out.remainder_bound = std::max(direct.remainder_bound, commuted.remainder_bound) * std::abs(gamma);
  return out;
}

double MeasureDvm::radial_mass(int nodes) const {
  // The integrand e^{-r^2} is even, so the half-line integral is half the Hermite sum.
  const GaussRule gh = gauss_hermite(nodes);
  double s = 0.0;
  for (double w : gh.weights) s += w;
  return (2.0 / std::sqrt(std::numbers::pi)) * 0.5 * s;
}

namespace {

/// int x^n e^{-A x^2 + B x} dx over the real line for complex B, Re A > 0.
ComplexDouble gaussian_moment(int n, double A, ComplexDouble B) {
  const ComplexDouble mu = B / (2.0 * A);
  ComplexDouble sum = 0.0;
  for (int k = 0; k <= n; k += 2)
    sum += binomial(n, k).get_d() * even_moment(k).get_d() * std::pow(2.0 * A, -k / 2.0) * std::pow(mu, n - k);
  return std::sqrt(std::numbers::pi / A) * std::exp(B * B / (4.0 * A)) * sum;
}

ComplexMultivector inner_product_exact(const GaussPoly& f, const GaussPoly& g) {
  const int m = f.dim();
  const double A = f.a().get_d() + g.a().get_d();
  const ComplexDouble B = std::conj(cd(f.b())) + cd(g.b());
  const ComplexDouble c = std::conj(f.constant().value()) * g.constant().value();
  ComplexMultivector out(m);
  for (std::size_t j = 0; j < f.poly().size(); ++j) {
    const ComplexMultivector pf = hermitian_conjugate(to_complex(f.poly()[j]));
    for (std::size_t k = 0; k < g.poly().size(); ++k)
      out += (pf * to_complex(g.poly()[k])).scaled(c * gaussian_moment(static_cast<int>(j + k), A, B));
  }
  return out;
}

struct SphereAverages {
  ComplexMultivector omega;       ///< (1/sigma_m) int w dS
  ComplexMultivector omega_dag;   ///< (1/sigma_m) int w^dagger dS
  ComplexMultivector dag_omega;   ///< (1/sigma_m) int w^dagger w dS
};

/// The direction averages entering <U_s f, U_s g>, computed once with the exact rule.
SphereAverages sphere_averages(int m) {
  RationalPolynomial w(m), wd(m), ww(m);
  for (int j = 1; j <= m; ++j) {
    const auto ej = Multivector<Rational>::generator(m, j);
    w.add_term(Monomial::unit(j), ej);
    wd.add_term(Monomial::unit(j), clifford_conjugate(ej));
    for (int k = 1; k <= m; ++k)
      ww.add_term(Monomial::unit(j) * Monomial::unit(k), clifford_conjugate(ej) * Multivector<Rational>::generator(m, k));
  }
  return {to_complex(sphere_integrate_exact(w).average), to_complex(sphere_integrate_exact(wd).average),
          to_complex(sphere_integrate_exact(ww).average)};
}

ComplexMultivector inner_product_dvm(const GaussPoly& Ff, const GaussPoly& Fg, const SphereAverages& avg, int level) {
  const int m = Ff.dim();
  const double kx = Ff.a().get_d() + Fg.a().get_d();
  const double kr = 1.0 - kx;
  if (!(kr > 0.0)) throw DomainError("U_s images are not square integrable for this pair");
  const double center = (std::conj(to_complex(Ff.b())) + to_complex(Fg.b())).real() / (2.0 * kx);
  const GaussRule gh = gauss_hermite(level);
  const double sx = 1.0 / std::sqrt(kx), sr = 1.0 / std::sqrt(kr);
  ComplexMultivector acc(m);
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    const double ti = gh.nodes[i];
    const double x0 = center + sx * ti;
    const double wi = gh.weights[i] * std::exp(ti * ti) * sx;
    for (std::size_t j = 0; j < gh.nodes.size(); ++j) {
      const double tj = gh.nodes[j];
      const double r = sr * tj;
      const double wj = gh.weights[j] * std::exp(tj * tj - r * r) * sr;
      const SliceValue vf = slice_from_entire(Ff, x0, r);
      const SliceValue vg = slice_from_entire(Fg, x0, r);
      const ComplexMultivector af = hermitian_conjugate(vf.alpha), bf = hermitian_conjugate(vf.beta);
      ComplexMultivector G = af * vg.alpha + bf * avg.dag_omega * vg.beta + af * avg.omega * vg.beta +
                             bf * avg.omega_dag * vg.alpha;
      acc += G.scaled(ComplexDouble(wi * wj, 0.0));
    }
  }
  // (2/sqrt(pi)) int_0^inf = (1/sqrt(pi)) int_R for the even integrand.
  return acc.scaled(ComplexDouble(1.0 / std::sqrt(std::numbers::pi), 0.0));
}

}  // namespace

UnitarityResult unitarity_check(const GaussPoly& f, const GaussPoly& g, std::pair<int, int> levels) {
  if (f.dim() != g.dim()) throw DimensionMismatch("unitarity check needs functions of the same dimension");
  if (levels.first < 1 || levels.second < levels.first) throw DomainError("quadrature levels must be increasing");
  const SphereAverages avg = sphere_averages(f.dim());
  const GaussPoly Ff = heat_semigroup(f), Fg = heat_semigroup(g);
  UnitarityResult out;
  out.levels = levels;
  out.lhs = inner_product_exact(f, g);
  out.rhs_coarse = inner_product_dvm(Ff, Fg, avg, levels.first);
  out.rhs = inner_product_dvm(Ff, Fg, avg, levels.second);
  out.coarse_residual = max_abs_diff(out.lhs, out.rhs_coarse);
  out.residual = max_abs_diff(out.lhs, out.rhs);
  out.converged = out.residual <= out.coarse_residual + 1e-12;
  return out;
}

}  // namespace fsq
