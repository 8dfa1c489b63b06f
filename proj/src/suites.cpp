#include "fsq/suites.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fsq {

void SuiteParams::validate() const {
  if (m < 1 || m > 6) throw DomainError("suite parameter m must be in [1, 6]");
  if (max_degree < 0 || max_degree > 10) throw DomainError("suite parameter max-degree must be in [0, 10]");
  if (trials < 1 || trials > 100000) throw DomainError("suite parameter trials must be in [1, 100000]");
  if (power && (*power < -6 || *power > 10)) throw DomainError("suite parameter power must be in [-6, 10]");
  if (degree && (*degree < 0 || *degree > 10)) throw DomainError("suite parameter degree must be in [0, 10]");
  if (prop45_order < -1 || prop45_order > 200) throw DomainError("prop45 order must be -1 or in [0, 200]");
  if (!rule.empty()) SphereRule::parse(rule);
}

SphereRule default_sphere_rule(int m) {
  // Product rules grow like level^(m-1); the integrands are smooth enough for the lower levels.
  return SphereRule::gauss(m <= 3 ? 24 : m == 4 ? 16 : m == 5 ? 10 : 7);
}

SphereRule SuiteParams::sphere_rule() const { return rule.empty() ? default_sphere_rule(m) : SphereRule::parse(rule); }

io::Json SuiteParams::to_json() const {
  io::Json j{{"m", m}, {"max_degree", max_degree}, {"seed", seed}, {"trials", trials},
             {"prop45_order", prop45_order}, {"rule", sphere_rule().to_string()}};
  if (power) j["power"] = *power;
  if (degree) j["degree"] = *degree;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "gck", "fueter", "prop45", "radon", "cst", "all"};
  return names;
}

const std::vector<std::string>& operation_manifest() {
  static const std::vector<std::string> ops{
      "geometric_product", "clifford_conjugate", "hermitian_conjugate", "constants",
      "apply_operator", "paravector_power", "is_monogenic",
      "slice_extension", "intrinsic_split", "gck_extension", "gck_bessel_form", "appell_Q",
      "cauchy_kernel", "kelvin_inversion", "monogenic_monomial", "verify_prop45",
      "tau_on_power", "laplacian_power_route", "lemma41_AB", "tau_on_laurent",
      "sphere_integrate", "funk_hecke_constants", "dual_radon", "plane_wave_gck_check", "cauchy_plane_wave_check",
      "heat_semigroup", "classical_cst", "slice_cst", "axial_cst", "fueter_cst", "unitarity_check",
      "run_suite", "export_object"};
  return ops;
}

const std::vector<std::string>& export_kinds() {
  static const std::vector<std::string> kinds{"Qpoly", "monomialP", "cauchyE", "fueter_power"};
  return kinds;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kTinyMismatch = 1e-300;

template <typename S>
double exact_residual(const Multivector<S>& a, const Multivector<S>& b) {
  if (a == b) return 0.0;
  const double r = max_abs_diff(to_complex(a), to_complex(b));
  return r > 0.0 ? r : kTinyMismatch;
}

double exact_residual(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a == b) return 0.0;
  const RationalPolynomial diff = a - b;
  double r = 0.0;
  for (const auto& [mo, c] : diff.terms()) r = std::max(r, c.norm());
  return r > 0.0 ? r : kTinyMismatch;
}

double exact_residual(const LaurentPoly& a, const LaurentPoly& b) {
  if (a == b) return 0.0;
  const LaurentPoly diff = a - b;
  double r = 0.0;
  for (const auto& [n, c] : diff.terms()) r = std::max(r, std::abs(c.get_d()));
  return r > 0.0 ? r : kTinyMismatch;
}

double exact_residual(const ScaledPolynomial& a, const ScaledPolynomial& b) {
  if (a == b) return 0.0;
  const RationalPolynomial pa = a.poly, pb = b.poly;
  const double sa = std::abs(a.scale.value()), sb = std::abs(b.scale.value());
  double r = 0.0;
  r = std::abs(sa - sb);
  for (const auto& [mo, c] : pa.terms()) r = std::max(r, std::abs(c.norm() * sa - pb.coeff(mo).norm() * sb));
  return r > 0.0 ? r : kTinyMismatch;
}

/// Collects cases for one suite run.
class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : r_(r) {}

  void cover(const std::string& op) { r_.covered.insert(op); }

  template <typename F>
  void exact(const std::string& id, const std::string& anchor, int m, int k, F&& residual) {
    run(id, anchor, m, k, true, 0.0, std::forward<F>(residual));
  }
  template <typename F>
  void numeric(const std::string& id, const std::string& anchor, int m, int k, double tol, F&& residual) {
    run(id, anchor, m, k, false, tol, std::forward<F>(residual));
  }
  void add(ReportEntry e) { r_.entries.push_back(std::move(e)); }

 private:
  template <typename F>
  void run(const std::string& id, const std::string& anchor, int m, int k, bool exact, double tol, F&& residual) {
    ReportEntry e{id, anchor, m, k, exact, 0.0, tol, 0.0};
    const auto t0 = Clock::now();
    e.residual = residual();
    e.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r_.entries.push_back(std::move(e));
  }

  VerificationReport& r_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  return make_rational(num(rng), den(rng));
}

Multivector<Rational> random_element(int m, std::mt19937_64& rng) {
  Multivector<Rational> a(m);
  std::bernoulli_distribution keep(0.6);
  for (std::uint32_t b = 0; b < (1u << m); ++b)
    if (keep(rng)) a.add_term(Blade(b), random_rational(rng));
  return a;
}

Multivector<ComplexRational> random_complex_element(int m, std::mt19937_64& rng) {
  Multivector<ComplexRational> a(m);
  std::bernoulli_distribution keep(0.6);
  for (std::uint32_t b = 0; b < (1u << m); ++b)
    if (keep(rng)) a.add_term(Blade(b), ComplexRational(random_rational(rng), random_rational(rng)));
  return a;
}

RationalPolynomial random_polynomial(int m, int max_degree, int terms, std::mt19937_64& rng) {
  RationalPolynomial p(m);
  std::uniform_int_distribution<int> var(0, m);
  std::uniform_int_distribution<int> deg(0, std::max(max_degree, 0));
  for (int t = 0; t < terms; ++t) {
    Monomial mo;
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) ++mo.e[var(rng)];
    p.add_term(mo, random_element(m, rng));
  }
  return p;
}

std::vector<double> random_direction_point(int m, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(m);
  double n2 = 0.0;
  for (auto& x : v) {
    x = g(rng);
    n2 += x * x;
  }
  const double s = radius / std::sqrt(n2);
  for (auto& x : v) x *= s;
  return v;
}

// ---------------------------------------------------------------------------
// algebra

void suite_algebra(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  std::mt19937_64 rng(p.seed);
  rec.cover("geometric_product");
  rec.cover("clifford_conjugate");
  rec.cover("hermitian_conjugate");
  rec.cover("constants");
  rec.cover("apply_operator");
  rec.cover("paravector_power");
  rec.cover("is_monogenic");

  rec.exact("algebra.generator_relations", "e_j e_l + e_l e_j = -2 delta_jl", m, 0, [&] {
    double r = 0.0;
    for (int j = 1; j <= m; ++j)
      for (int l = 1; l <= m; ++l) {
        const auto ej = Multivector<Rational>::generator(m, j), el = Multivector<Rational>::generator(m, l);
        const auto expect = Multivector<Rational>::scalar(m, Rational(j == l ? -2 : 0));
        r = std::max(r, exact_residual(ej * el + el * ej, expect));
      }
    return r;
  });
  rec.exact("algebra.associativity", "(ab)c = a(bc) on random rational elements", m, p.trials, [&] {
    double r = 0.0;
    for (int t = 0; t < p.trials; ++t) {
      const auto a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      r = std::max(r, exact_residual((a * b) * c, a * (b * c)));
    }
    return r;
  });
  rec.exact("algebra.conjugation", "conj(ab) = conj(b) conj(a), conj(conj(a)) = a", m, p.trials, [&] {
    double r = 0.0;
    for (int t = 0; t < p.trials; ++t) {
      const auto a = random_element(m, rng), b = random_element(m, rng);
      r = std::max(r, exact_residual(clifford_conjugate(a * b), clifford_conjugate(b) * clifford_conjugate(a)));
      r = std::max(r, exact_residual(clifford_conjugate(clifford_conjugate(a)), a));
    }
    return r;
  });
  rec.exact("algebra.hermitian", "(ab)^dagger = b^dagger a^dagger over complexified coefficients", m, p.trials, [&] {
    double r = 0.0;
    for (int t = 0; t < p.trials; ++t) {
      const auto a = random_complex_element(m, rng), b = random_complex_element(m, rng);
      r = std::max(r, exact_residual(hermitian_conjugate(a * b), hermitian_conjugate(b) * hermitian_conjugate(a)));
    }
    return r;
  });
  rec.exact("algebra.paravector_norm", "x conj(x) = |x|^2 for paravectors", m, p.trials, [&] {
    double r = 0.0;
    for (int t = 0; t < p.trials; ++t) {
      Paravector<Rational> x{random_rational(rng), {}};
      for (int j = 0; j < m; ++j) x.xv.push_back(random_rational(rng));
      const auto v = x.to_multivector();
      r = std::max(r, exact_residual(v * x.conj().to_multivector(), Multivector<Rational>::scalar(m, x.norm_squared())));
    }
    return r;
  });
  rec.exact("algebra.constants", "sigma_m, lambda_m, gamma_m from their Gamma-function forms", m, 0, [&] {
    const DimensionConstants c = constants(m);
    double r = 0.0;
    if (c.sigma_m != sphere_area(m) || c.sigma_m1 != sphere_area(m + 1)) r = 1.0;
    const PiScalar g = gamma_half(m + 1);
    if (c.lambda_m != PiScalar(rational_pow(Rational(2), m - 1), 0) * g * g) r = 1.0;
    if (c.gamma_m != PiScalar(i_power(1 - m), 0) * c.lambda_m / PiScalar(factorial(m - 1), 0)) r = 1.0;
    if (m % 2 == 1 && c.gamma_m != PiScalar(gamma_odd_closed_form(m), 0)) r = 1.0;
    return r;
  });
  rec.numeric("algebra.dense_float_product", "dense float geometric product (" +
                  std::string(simd::to_string(simd::active_backend())) + ") against the exact product",
              m, p.trials, 1e-4, [&] {
                const std::size_t n = std::size_t{1} << m;
                std::vector<float> a(n), b(n), out(n);
                double r = 0.0;
                for (int t = 0; t < p.trials; ++t) {
                  const auto x = random_element(m, rng), y = random_element(m, rng);
                  std::fill(a.begin(), a.end(), 0.0f);
                  std::fill(b.begin(), b.end(), 0.0f);
                  for (const auto& [bl, c] : x.terms()) a[bl.bits] = static_cast<float>(c.get_d());
                  for (const auto& [bl, c] : y.terms()) b[bl.bits] = static_cast<float>(c.get_d());
                  simd::geometric_product(m, a.data(), b.data(), out.data());
                  const auto exact = x * y;
                  for (std::uint32_t c = 0; c < n; ++c)
                    r = std::max(r, std::abs(out[c] - exact.coeff(Blade(c)).get_d()) /
                                        std::max(1.0, std::abs(exact.coeff(Blade(c)).get_d())));
                }
                return r;
              });
  rec.exact("poly.laplacian_factorization", "D Dbar = Dbar D = Laplacian on random polynomials", m, p.max_degree, [&] {
    double r = 0.0;
    for (int t = 0; t < 8; ++t) {
      const RationalPolynomial q = random_polynomial(m, p.max_degree, 6, rng);
      const RationalPolynomial lap = apply_operator(OperatorTag::Laplacian, q);
      r = std::max(r, exact_residual(apply_operator(OperatorTag::D, apply_operator(OperatorTag::Dbar, q)), lap));
      r = std::max(r, exact_residual(apply_operator(OperatorTag::Dbar, apply_operator(OperatorTag::D, q)), lap));
    }
    return r;
  });
  rec.exact("poly.paravector_power", "paravector_power(m, k) evaluates to x^k", m, p.max_degree, [&] {
    double r = 0.0;
    for (int k = 0; k <= p.max_degree; ++k) {
      Paravector<Rational> x{random_rational(rng), {}};
      for (int j = 0; j < m; ++j) x.xv.push_back(random_rational(rng));
      Multivector<Rational> pw = Multivector<Rational>::scalar(m, Rational(1));
      for (int i = 0; i < k; ++i) pw = pw * x.to_multivector();
      r = std::max(r, exact_residual(paravector_power(m, k).evaluate(x), pw));
    }
    return r;
  });
  rec.exact("poly.is_monogenic", "x is monogenic only for m = 1; Q_1^m is monogenic", m, 1, [&] {
    const bool x_mono = is_monogenic(paravector_power(m, 1));
    const bool q_mono = is_monogenic(appell_Q(m, 1));
    return (x_mono == (m == 1) && q_mono) ? 0.0 : 1.0;
  });
}

// ---------------------------------------------------------------------------
// gck

void suite_gck(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  std::mt19937_64 rng(p.seed + 1);
  for (const char* op : {"gck_extension", "gck_bessel_form", "appell_Q", "slice_extension", "intrinsic_split",
                         "apply_operator", "is_monogenic"})
    rec.cover(op);
  const int lo = p.degree ? *p.degree : 0;
  const int hi = p.degree ? *p.degree : p.max_degree;
  for (int k = lo; k <= hi; ++k) {
    const LaurentPoly f = LaurentPoly::monomial(k);
    const AxialSeries s = gck_extension(f, m);
    const RationalPolynomial poly = s.to_polynomial();
    rec.exact("gck.monogenic", "D GCK[x0^k] = 0", m, k, [&] { return is_monogenic(poly) ? 0.0 : 1.0; });
    rec.exact("gck.restriction", "GCK[x0^k] restricted to the real line is x0^k", m, k,
              [&] { return exact_residual(restrict_to_axis(poly), f); });
    rec.exact("gck.bessel_form", "GCK[x0^k] equals its Bessel-function representation", m, k,
              [&] { return gck_bessel_form(f, m) == s ? 0.0 : 1.0; });
    const RationalPolynomial q = appell_Q(m, k);
    rec.exact("appell.monogenic", "Q_k^m is monogenic", m, k, [&] { return is_monogenic(q) ? 0.0 : 1.0; });
    rec.exact("appell.derivative", "(1/2)(d0 - dx) Q_k^m = k Q_{k-1}^m", m, k, [&] {
      const RationalPolynomial lhs = apply_operator(OperatorTag::HypercomplexDerivative, q);
      const RationalPolynomial rhs = k == 0 ? RationalPolynomial(m) : appell_Q(m, k - 1).scaled(Rational(k));
      return exact_residual(lhs, rhs);
    });
    rec.exact("appell.unit", "Q_k^m(1) = 1", m, k, [&] {
      const Paravector<Rational> one{Rational(1), std::vector<Rational>(m, Rational(0))};
      return exact_residual(q.evaluate(one), Multivector<Rational>::scalar(m, Rational(1)));
    });
    rec.exact("appell.T_sum", "sum_j T_j^k(m) x^(k-j) conj(x)^j = Q_k^m", m, k,
              [&] { return exact_residual(appell_T_sum(m, k), q); });
    rec.numeric("slice.intrinsic_split", "alpha + w beta from the intrinsic split equals S[x0^k]", m, k, 1e-12, [&] {
      const IntrinsicPair ip = intrinsic_split(f);
      const SliceExtension se = slice_extension(f, m);
      double r = 0.0;
      for (int t = 0; t < 5; ++t) {
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        const double x0 = u(rng);
        const std::vector<double> xv = random_direction_point(m, std::abs(u(rng)), rng);
        double r2 = 0.0;
        for (double x : xv) r2 += x * x;
        const AxialValue v{ip.alpha.evaluate(x0, std::sqrt(r2)), ip.beta.evaluate(x0, std::sqrt(r2))};
        const double scale = std::max(1.0, std::pow(std::abs(x0) + std::sqrt(r2), k));
        r = std::max(r, max_abs_diff(axial_to_multivector(m, v, xv), se.evaluate(x0, xv)) / scale);
      }
      return r;
    });
  }
  rec.exact("gck.laurent_dirac", "GCK[x0^-2] is annihilated by D up to the truncation order", m, -2, [&] {
    const AxialSeries s = gck_extension(LaurentPoly::monomial(-2), m);
    const AxialSeries d = s.dirac_image();
    double r = 0.0;
    for (int j = 0; j < d.order; ++j) r = std::max(r, exact_residual(d.coeffs[j], LaurentPoly()));
    return r;
  });
}

// ---------------------------------------------------------------------------
// fueter

/// Compares the truncated series tau_m[f] with the sum of the closed-form power images at
/// |x|/|x0| in {0, 0.3}, x0 in {1, -1.3}. Relative to max(1, |value|).
double laurent_image_residual(int m, const LaurentPoly& f) {
  const ScaledSeries s = tau_on_laurent(m, f);
  std::vector<std::pair<double, FueterResult>> parts;
  for (const auto& [n, c] : f.terms()) parts.emplace_back(c.get_d(), tau_on_power(m, n));
  const ComplexDouble sc = s.scale.value();
  double r = 0.0;
  for (double x0 : {1.0, -1.3})
    for (double q : {0.0, 0.3}) {
      const double rr = q * std::abs(x0);
      const AxialValue v = s.series.evaluate_axial(x0, rr);
      ComplexDouble A = 0.0, B = 0.0;
      for (const auto& [c, res] : parts) {
        if (!res.closed_form) continue;  // kernel branch
        const auto [a, b] = res.closed_form->evaluate_axial_complex(x0, rr);
        A += c * a;
        B += c * b;
      }
      const double scale = std::max({1.0, std::abs(A), std::abs(B)});
      r = std::max({r, std::abs(sc * v.A - A) / scale, std::abs(sc * v.B - B) / scale});
    }
  return r;
}

void suite_fueter(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  std::mt19937_64 rng(p.seed + 2);
  for (const char* op : {"tau_on_power", "tau_on_laurent"}) rec.cover(op);
  const int lo = p.power ? 0 : -3;
  const int hi = p.power ? *p.power : p.max_degree;
  for (int l = std::min(lo, hi); l <= hi; ++l) {
    const FueterResult res = tau_on_power(m, l);
    ReportEntry e{"fueter.branch." + to_string(res.branch),
                  res.branch == FueterBranch::Kernel ? "tau_m[x^l] = 0 for 0 <= l <= m-2"
                  : res.branch == FueterBranch::Positive
                      ? "tau_m[x^l] = i^(1-m) P^(l+1-m)"
                      : "tau_m[x^l] = i^(1-m) sgn(-x0)^(m-1) P^(l), truncated GCK",
                  m, l, res.cross_check_exact, res.residual, res.cross_check_exact ? 0.0 : 1e-9, 0.0};
    rec.add(e);
  }
  for (int k = 0; k <= std::min(p.max_degree, 6); ++k) {
    rec.exact("fueter.appell_image", "tau_m[x^(m-1+k)] = gamma_m (m-1+k)!/k! Q_k^m", m, k, [&] {
      const FueterResult res = tau_on_power(m, m - 1 + k);
      const ScaledPolynomial lhs{res.scale, *res.polynomial};
      const ScaledPolynomial rhs{constants(m).gamma_m * PiScalar(factorial(m - 1 + k) / factorial(k), 0), appell_Q(m, k)};
      return exact_residual(lhs, rhs);
    });
  }
  rec.numeric("fueter.tau_on_laurent", "tau_m on x^-1 + 2 x^(m+1) is the sum of the power images", m, 0, 1e-9, [&] {
    return laurent_image_residual(m, LaurentPoly::monomial(-1) + LaurentPoly::monomial(m + 1, Rational(2)));
  });
  rec.cover("laplacian_power_route");
  rec.cover("lemma41_AB");
  if (m % 2 == 0) {
    rec.exact("fueter.even_m_rejected", "fractional Laplacian powers are rejected for even m", m, 0, [&] {
      int rejected = 0;
      try {
        laplacian_power_route(m, LaurentPoly::monomial(m));
      } catch (const Unsupported&) {
        ++rejected;
      }
      try {
        lemma41_AB(m, intrinsic_split(LaurentPoly::monomial(m)));
      } catch (const Unsupported&) {
        ++rejected;
      }
      return rejected == 2 ? 0.0 : 1.0;
    });
  } else {
    for (int k = 0; k <= std::min(p.max_degree + m - 1, 8); ++k) {
      rec.exact("fueter.laplacian_route", "Delta^((m-1)/2) S[x^k] = gamma_m GCK[d^(m-1) x^k]", m, k, [&] {
        const LaplacianRouteResult lr = laplacian_power_route(m, LaurentPoly::monomial(k));
        const FueterResult fr = tau_on_power(m, k);
        return exact_residual(ScaledPolynomial{PiScalar(Rational(1), 0), *lr.polynomial},
                              ScaledPolynomial{fr.scale, *fr.polynomial});
      });
      rec.exact("fueter.lemma41", "(m-1)!! (r^-1 d_r)^((m-1)/2) on (alpha, beta) equals tau_m[x^k]", m, k, [&] {
        const AxialClosedForm ab = lemma41_AB(m, intrinsic_split(LaurentPoly::monomial(k)));
        const FueterResult fr = tau_on_power(m, k);
        return exact_residual(closed_form_to_polynomial(ab), ScaledPolynomial{fr.scale, *fr.polynomial});
      });
    }
    rec.numeric("fueter.negative_laplacian", "Delta^((m-1)/2) S[x^-1] against tau_m[x^-1] at 20 random points", m, -1,
                1e-8, [&] {
                  const AxialClosedForm lap = *laplacian_power_route(m, LaurentPoly::monomial(-1)).closed_form;
                  const AxialClosedForm tau = *tau_on_power(m, -1).closed_form;
                  double r = 0.0;
                  std::uniform_real_distribution<double> u(-2.0, 2.0);
                  for (int t = 0; t < 20; ++t) {
                    double x0 = u(rng);
                    if (std::abs(x0) < 0.2) x0 += 0.5;
                    const std::vector<double> xv = random_direction_point(m, std::abs(u(rng)), rng);
                    const Multivector<double> a = lap.evaluate(x0, xv), b = tau.evaluate(x0, xv);
                    r = std::max(r, max_abs_diff(a, b) / std::max(1.0, b.norm()));
                  }
                  return r;
                });
  }
}

// ---------------------------------------------------------------------------
// prop45 and kernels

Multivector<double> dirac_fd(const PointFunction& f, int m, double x0, const std::vector<double>& xv) {
  constexpr double h = 1e-4;
  Multivector<double> out = (f(x0 + h, xv) - f(x0 - h, xv)).scaled(1.0 / (2 * h));
  for (int j = 0; j < m; ++j) {
    std::vector<double> a = xv, b = xv;
    a[j] += h;
    b[j] -= h;
    out += Multivector<double>::generator(m, j + 1) * (f(x0, a) - f(x0, b)).scaled(1.0 / (2 * h));
  }
  return out;
}

void suite_prop45(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  std::mt19937_64 rng(p.seed + 3);
  for (const char* op : {"verify_prop45", "monogenic_monomial", "cauchy_kernel", "kelvin_inversion"}) rec.cover(op);
  for (int k = 1; k <= std::max(1, std::min(p.max_degree, 4)); ++k)
    for (ReportEntry& e : verify_prop45(m, k, p.prop45_order)) rec.add(std::move(e));
  const AxialClosedForm E = cauchy_kernel(m);
  const PointFunction Ef = [&](double x0, const std::vector<double>& xv) { return E.evaluate(x0, xv); };
  rec.numeric("kernel.cauchy_monogenic", "D E = 0 away from the origin (central differences)", m, 1, 1e-6, [&] {
    double r = 0.0;
    for (int t = 0; t < 5; ++t) {
      std::uniform_real_distribution<double> u(0.5, 1.5);
      const std::vector<double> xv = random_direction_point(m, u(rng), rng);
      r = std::max(r, dirac_fd(Ef, m, u(rng) - 1.0, xv).norm());
    }
    return r;
  });
  rec.numeric("kernel.kelvin", "symbolic and pointwise Kelvin inversion of E agree", m, 1, 1e-12, [&] {
    const AxialClosedForm IE = kelvin_inversion(E);
    double r = 0.0;
    for (int t = 0; t < 5; ++t) {
      std::uniform_real_distribution<double> u(0.3, 1.7);
      const double x0 = u(rng) * (t % 2 == 0 ? 1.0 : -1.0);
      const std::vector<double> xv = random_direction_point(m, u(rng), rng);
      r = std::max(r, max_abs_diff(kelvin_inversion(Ef, m, x0, xv), IE.evaluate(x0, xv)));
    }
    return r;
  });
  rec.exact("kernel.kelvin_involution", "I[P^(k-1)] = P^(-k) symbolically", m, 2, [&] {
    const AxialClosedForm back = kelvin_inversion(monogenic_monomial(m, 1).closed_form);
    const AxialClosedForm neg = monogenic_monomial(m, -2).closed_form;
    const auto [A, B] = std::pair{back.A - neg.A.scaled((neg.scale / back.scale).coeff.re),
                                  back.B - neg.B.scaled((neg.scale / back.scale).coeff.re)};
    return A.is_identically_zero() && B.is_identically_zero() && back.sign_power % 2 == neg.sign_power % 2 ? 0.0 : 1.0;
  });
}

// ---------------------------------------------------------------------------
// radon

void suite_radon(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  const SphereRule chosen = p.sphere_rule();
  const SphereRule gauss = chosen.is_numeric() ? chosen : default_sphere_rule(m);
  for (const char* op : {"sphere_integrate", "funk_hecke_constants", "dual_radon", "plane_wave_gck_check",
                         "cauchy_plane_wave_check"})
    rec.cover(op);
  rec.exact("radon.sphere_area", "int 1 dS = sigma_m and int w_1 dS = 0 under the exact rule", m, 0, [&] {
    const ExactSphereIntegral one = sphere_integrate_exact(RationalPolynomial::constant(m, Rational(1)));
    const ExactSphereIntegral w1 = sphere_integrate_exact(RationalPolynomial::variable(m, 1));
    return one.sigma == constants(m).sigma_m && one.average == Multivector<Rational>::scalar(m, Rational(1)) &&
                   w1.average.is_zero()
               ? 0.0
               : 1.0;
  });
  rec.numeric("radon.sphere_area_numeric", "numeric rule " + gauss.to_string() + " reproduces sigma_m", m, 0, 1e-12,
              [&] {
                const double s = sphere_integrate(RationalPolynomial::constant(m, Rational(1)), gauss).value.scalar_part();
                return std::abs(s - constants(m).sigma_m.real_value());
              });
  for (int j = 0; j <= p.max_degree; ++j) {
    rec.exact("radon.funk_hecke", "C0, C1 from a symbolic x agree with the monomial integrals of w_1", m, j, [&] {
      const FunkHeckeConstants c = funk_hecke_constants(m, j);
      std::vector<int> a(m, 0), b(m, 0);
      a[0] = j;
      b[0] = j + 1;
      const bool ok0 = j % 2 == 1 ? c.C0.is_zero() : c.C0 == sphere_monomial_integral(a);
      const bool ok1 = j % 2 == 0 ? c.C1.is_zero() : c.C1 == sphere_monomial_integral(b);
      return ok0 && ok1 ? 0.0 : 1.0;
    });
  }
  rec.exact("radon.linear", "R[S[x0]] = x0 + x_vec / m", m, 1, [&] {
    const RationalPolynomial expect =
        RationalPolynomial::variable(m, 0) + RationalPolynomial::vector_variable(m).scaled(make_rational(1, m));
    return exact_residual(dual_radon(slice_extension(LaurentPoly::monomial(1), m).to_polynomial()), expect);
  });
  for (int k = 0; k <= p.max_degree; ++k) {
    ReportEntry e = plane_wave_gck_check(LaurentPoly::monomial(k), m, SphereRule::exact());
    e.identity = "radon.plane_wave_gck";
    e.anchor = "R[S[x0^k]] = GCK[x0^k] = Q_k^m exactly";
    rec.add(e);
    rec.exact("radon.diagram", "gamma_m GCK d^(m-1) = gamma_m R S d^(m-1) (and = Delta^((m-1)/2) S for odd m)", m, k,
              [&] {
                const LaurentPoly f = LaurentPoly::monomial(k + m - 1);
                const LaurentPoly df = f.derivative(m - 1);
                const RationalPolynomial via_radon = dual_radon(slice_extension(df, m).to_polynomial());
                double r = exact_residual(via_radon, gck_extension(df, m).to_polynomial());
                if (m % 2 == 1) {
                  const ScaledPolynomial lap{PiScalar(Rational(1), 0), *laplacian_power_route(m, f).polynomial};
                  r = std::max(r, exact_residual(lap, ScaledPolynomial{constants(m).gamma_m, via_radon}));
                }
                return r;
              });
  }
  rec.exact("radon.monogenic_image", "R maps S[f0] to a monogenic polynomial", m, p.max_degree, [&] {
    LaurentPoly f;
    for (int k = 0; k <= p.max_degree; ++k) f.add_term(k, make_rational(k % 3 - 1, k + 1));
    return is_monogenic(dual_radon(slice_extension(f, m).to_polynomial())) ? 0.0 : 1.0;
  });
  {
    std::vector<double> xv(m, 0.0);
    xv[0] = 0.3;
    if (m > 1) xv[1] = 0.2;
    ReportEntry e = plane_wave_gck_check(LaurentPoly::monomial(3), m, gauss, 1.0, xv, 1e-10);
    e.identity = "radon.plane_wave_numeric";
    rec.add(e);
    ReportEntry neg = plane_wave_gck_check(LaurentPoly::monomial(-2), m, gauss, -1.0, xv, 1e-10);
    neg.identity = "radon.plane_wave_laurent";
    rec.add(neg);
    ReportEntry mc = plane_wave_gck_check(LaurentPoly::monomial(3), m, SphereRule::monte_carlo(100000, p.seed), 1.0,
                                          xv, 3e-2);
    mc.identity = "radon.plane_wave_monte_carlo";
    rec.add(mc);
  }
  for (double x0 : {1.0, -1.0}) {
    std::vector<double> xv(m, 0.1);
    xv[0] = 0.2;
    ReportEntry e = cauchy_plane_wave_check(m, x0, xv, gauss, 1e-6);
    e.identity = "radon.cauchy_plane_wave";
    rec.add(e);
    ReportEntry pk = monomial_plane_wave_check(m, 2, x0, xv, gauss, 1e-6);
    pk.identity = "radon.monomial_plane_wave";
    rec.add(pk);
  }
}

// ---------------------------------------------------------------------------
// cst

struct CstPoint {
  double x0;
  std::vector<double> xv;
};

std::vector<CstPoint> cst_points(int m) {
  std::vector<CstPoint> pts;
  std::vector<double> a(m, 0.0), b(m, 0.3 / std::sqrt(static_cast<double>(m))), c(m, 0.0);
  a[0] = 0.5;
  c[m - 1] = 0.8;
  pts.push_back({0.7, a});
  pts.push_back({-0.4, b});
  pts.push_back({0.2, c});
  return pts;
}

void suite_cst(const SuiteParams& p, Recorder& rec) {
  const int m = p.m;
  const int family = std::min(3, p.max_degree);
  const SphereRule rule = default_sphere_rule(m);
  for (const char* op : {"heat_semigroup", "classical_cst", "slice_cst", "axial_cst", "fueter_cst", "unitarity_check"})
    rec.cover(op);
  const GaussPoly g0 = GaussPoly::gaussian(m, make_rational(1, 2));
  rec.numeric("cst.heat_gaussian", "heat flow of e^(-x^2/2) is e^(-x^2/4)/sqrt(2), also at complex z", m, 0, 1e-12,
              [&] {
                double r = 0.0;
                for (ComplexDouble z : {ComplexDouble(0.7, 0.0), ComplexDouble(-0.3, 0.8), ComplexDouble(1.1, -0.4)}) {
                  const ComplexDouble oracle = std::exp(-z * z / 4.0) / std::sqrt(2.0);
                  r = std::max(r, std::abs(classical_cst(g0, z).scalar_part() - oracle));
                }
                return r;
              });
  for (int n = 0; n <= family; ++n) {
    const GaussPoly h = GaussPoly::hermite(m, n);
    rec.numeric("cst.heat_quadrature", "closed-form heat flow against Gauss-Hermite convolution", m, n, 1e-10, [&] {
      double r = 0.0;
      for (double x : {-1.2, 0.0, 0.7}) r = std::max(r, max_abs_diff(heat_semigroup(h).evaluate(x), heat_semigroup_quadrature(h, x)));
      return r;
    });
    rec.exact("cst.heat_commutation", "e^(Delta/2) d^j = d^j e^(Delta/2), j <= 5, in closed form", m, n, [&] {
      for (int j = 1; j <= 5; ++j)
        if (!(heat_semigroup(h.derivative(j)) == heat_semigroup(h).derivative(j))) return 1.0;
      return 0.0;
    });
    rec.numeric("cst.slice_fourier", "U_s via F(x0 +- i r) against its Fourier integral", m, n, 1e-8, [&] {
      double r = 0.0;
      for (const auto& pt : cst_points(m)) {
        double rr = 0.0;
        for (double x : pt.xv) rr += x * x;
        const SliceValue a = slice_cst(h, pt.x0, std::sqrt(rr)), b = slice_cst_fourier(h, pt.x0, std::sqrt(rr));
        r = std::max({r, max_abs_diff(a.alpha, b.alpha), max_abs_diff(a.beta, b.beta)});
      }
      return r;
    });
    rec.numeric("cst.parity", "alpha even and beta odd in r", m, n, 1e-10, [&] {
      const SliceValue a = slice_cst(h, 0.3, 0.6), b = slice_cst(h, 0.3, -0.6);
      const SliceValue z = slice_cst(h, 0.3, 0.0);
      return std::max({max_abs_diff(a.alpha, b.alpha), max_abs_diff(a.beta, b.beta.scaled(ComplexDouble(-1.0, 0.0))),
                       z.beta.norm()});
    });
    for (const auto& pt : cst_points(m)) {
      rec.numeric("cst.ua_routes", "U_a = GCK e^(Delta/2) = R U_s", m, n, 1e-7, [&] {
        const AxialCstResult ua = axial_cst(h, pt.x0, pt.xv);
        return max_abs_diff(ua.value, axial_cst_radon(h, pt.x0, pt.xv, rule));
      });
      const FueterCstResult fr = fueter_cst(h, pt.x0, pt.xv, rule);
      rec.numeric("cst.fueter_commuted", "tau_m S e^(Delta/2) = gamma_m U_a d^(m-1)", m, n, 1e-9,
                  [&] { return fr.residual_commuted; });
      rec.numeric("cst.fueter_radon", "tau_m S e^(Delta/2) = gamma_m R U_s d^(m-1)", m, n, 1e-7,
                  [&] { return fr.residual_radon; });
    }
  }
  rec.numeric("cst.measure_mass", "(2/sqrt(pi)) int_0^inf e^(-r^2) dr = 1", m, 0, 1e-14,
              [&] { return std::abs(MeasureDvm{m}.radial_mass() - 1.0); });
  double worst_fine = 0.0;
  bool converged = true;
  for (int i = 0; i <= family; ++i)
    for (int j = 0; j <= family; ++j) {
      const UnitarityResult u = unitarity_check(GaussPoly::hermite(m, i), GaussPoly::hermite(m, j));
      worst_fine = std::max(worst_fine, u.residual);
      converged = converged && u.converged;
      rec.numeric("cst.unitarity", "<h_i, h_j> = <U_s h_i, U_s h_j> over dv_m", m, 10 * i + j, 1e-5,
                  [&] { return u.residual; });
    }
  rec.exact("cst.unitarity_refinement", "the finer quadrature level is no worse than the coarser one", m, family,
            [&] { return converged ? 0.0 : 1.0; });
}

void run_named(const std::string& name, const SuiteParams& p, Recorder& rec) {
  if (name == "algebra") return suite_algebra(p, rec);
  if (name == "gck") return suite_gck(p, rec);
  if (name == "fueter") return suite_fueter(p, rec);
  if (name == "prop45") return suite_prop45(p, rec);
  if (name == "radon") return suite_radon(p, rec);
  if (name == "cst") return suite_cst(p, rec);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  params.validate();
  VerificationReport report;
  report.suite = name;
  report.params = params;
  Recorder rec(report);
  rec.cover("run_suite");
  if (name != "all") {
    run_named(name, params, rec);
    return report;
  }
  for (const auto& s : suite_names())
    if (s != "all") run_named(s, params, rec);
  rec.cover("export_object");
  for (const auto& kind : export_kinds()) {
    rec.exact("export." + kind, "export is canonical: re-serialization is byte identical", params.m, 2, [&] {
      const std::string a = io::dump(export_object(kind, params.m, 2));
      const std::string b = io::dump(io::Json::parse(a));
      return a == b ? 0.0 : 1.0;
    });
  }
  rec.exact("export.Qpoly_roundtrip", "exported Q_2^m parses back to appell_Q", params.m, 2, [&] {
    const io::Json j = export_object("Qpoly", params.m, 2);
    return exact_residual(io::polynomial_from_json(j.at("polynomial")), appell_Q(params.m, 2));
  });
  std::vector<std::string> missing;
  for (const auto& op : operation_manifest())
    if (!report.covered.count(op)) missing.push_back(op);
  std::string anchor = "every operation in the manifest is exercised";
  if (!missing.empty()) {
    anchor += "; missing:";
    for (const auto& op : missing) anchor += " " + op;
  }
  rec.exact("all.coverage", anchor, params.m, static_cast<int>(operation_manifest().size()),
            [&] { return static_cast<double>(missing.size()); });
  return report;
}

io::Json report_json(const VerificationReport& r, bool timings) {
  io::Json cases = io::Json::array();
  for (const auto& e : r.entries) cases.push_back(io::to_json(e, timings));
  io::Json cov = io::Json::array();
  for (const auto& op : r.covered) cov.push_back(op);
  return io::Json{{"schema", io::kSchemaVersion}, {"suite", r.suite},          {"params", r.params.to_json()},
                  {"pass", r.pass()},              {"cases", std::move(cases)}, {"coverage", std::move(cov)},
                  {"simd_backend", simd::to_string(simd::active_backend())}};
}

std::string report_table(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (m=" << r.params.m << ", max-degree=" << r.params.max_degree
     << ", seed=" << r.params.seed << ")\n";
  std::size_t failed = 0;
  for (const auto& e : r.entries) {
    if (!e.pass()) ++failed;
    os << (e.pass() ? "PASS " : "FAIL ") << std::left << std::setw(34) << e.identity << " m=" << e.m
       << " k=" << std::setw(3) << e.k << (e.exact ? " exact  " : " numeric") << " residual=" << std::scientific
       << std::setprecision(3) << e.residual;
    if (!e.exact) os << " tol=" << e.tolerance;
    os << std::defaultfloat << "\n";
  }
  os << (failed == 0 ? "PASS" : "FAIL") << ": " << r.entries.size() - failed << "/" << r.entries.size()
     << " cases passed\n";
  return os.str();
}

io::Json export_object(const std::string& kind, int m, int k) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  io::Json j{{"schema", io::kSchemaVersion}, {"kind", kind}, {"m", m}};
  if (kind == "Qpoly") {
    if (k < 0) throw DomainError("Qpoly needs k >= 0");
    j["k"] = k;
    j["polynomial"] = io::to_json(appell_Q(m, k));
  } else if (kind == "monomialP") {
    const MonogenicMonomial mm = monogenic_monomial(m, k);
    j["order"] = k;
    j["closed_form"] = io::to_json(mm.closed_form);
    if (k >= 0) {
      const ScaledPolynomial sp = closed_form_to_polynomial(mm.closed_form).normalized();
      j["polynomial"] = io::Json{{"scale", io::to_json(sp.scale)}, {"terms", io::to_json(sp.poly)}};
    }
  } else if (kind == "cauchyE") {
    j["closed_form"] = io::to_json(cauchy_kernel(m));
  } else if (kind == "fueter_power") {
    j["power"] = k;
    j["result"] = io::to_json(tau_on_power(m, k));
  } else {
    throw std::invalid_argument("unknown export kind '" + kind + "' (expected Qpoly, monomialP, cauchyE, fueter_power)");
  }
  return j;
}

namespace {

void check_dimension(int m) {
  if (m < 1 || m > 6) throw DomainError("m must be in [1, 6]");
}

io::Json point_json(double x0, const std::vector<double>& xv) { return io::Json{{"x0", x0}, {"x", xv}}; }

}  // namespace

CheckOutput radon_check(int m, int degree, const SphereRule& rule) {
  check_dimension(m);
  if (degree < 0 || degree > 10) throw DomainError("degree must be in [0, 10]");
  // Monte Carlo errors shrink like 1/sqrt(N); 10/sqrt(N) is about 10 standard errors for these integrands.
  const double tol = rule.kind == SphereRuleKind::MonteCarlo ? 10.0 / std::sqrt(static_cast<double>(rule.samples)) : 1e-10;
  std::vector<ReportEntry> entries;
  std::vector<double> xv(m, 0.0);
  xv[0] = 0.3;
  if (m > 1) xv[1] = 0.2;
  for (int k = 0; k <= degree; ++k) entries.push_back(plane_wave_gck_check(LaurentPoly::monomial(k), m, rule, 1.0, xv, tol));
  if (rule.is_numeric())
    for (double x0 : {1.0, -1.0}) entries.push_back(cauchy_plane_wave_check(m, x0, xv, rule, std::max(tol, 1e-6)));
  io::Json cases = io::Json::array();
  for (const auto& e : entries) cases.push_back(io::to_json(e));
  const bool pass = all_pass(entries);
  return {io::Json{{"schema", io::kSchemaVersion}, {"verb", "radon-check"}, {"m", m}, {"degree", degree},
                   {"rule", rule.to_string()}, {"cases", std::move(cases)}, {"pass", pass}},
          pass};
}

CheckOutput cst_check(int m, const std::string& which, int family, double tol) {
  check_dimension(m);
  if (family < 0 || family > 8) throw DomainError("hermite family index must be in [0, 8]");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  io::Json cases = io::Json::array();
  bool pass = true;
  io::Json doc{{"schema", io::kSchemaVersion}, {"verb", "cst-check"}, {"m", m}, {"which", which},
               {"family", "hermite:" + std::to_string(family)}, {"tol", tol}};
  if (which == "unitarity") {
    const std::pair<int, int> levels{24, 48};
    for (int i = 0; i <= family; ++i)
      for (int j = 0; j <= family; ++j) {
        const UnitarityResult u = unitarity_check(GaussPoly::hermite(m, i), GaussPoly::hermite(m, j), levels);
        const bool ok = u.residual < tol && u.converged;
        pass = pass && ok;
        cases.push_back(io::Json{{"i", i}, {"j", j}, {"lhs", io::to_json(u.lhs)}, {"rhs", io::to_json(u.rhs)},
                                 {"rhs_coarse", io::to_json(u.rhs_coarse)}, {"residual", u.residual},
                                 {"coarse_residual", u.coarse_residual}, {"converged", u.converged}, {"pass", ok}});
      }
    doc["quad_levels"] = io::Json::array({levels.first, levels.second});
  } else if (which == "ua-routes" || which == "fueter-routes") {
    const SphereRule rule = default_sphere_rule(m);
    doc["rule"] = rule.to_string();
    for (int n = 0; n <= family; ++n) {
      const GaussPoly h = GaussPoly::hermite(m, n);
      for (const auto& pt : cst_points(m)) {
        io::Json c{{"n", n}, {"point", point_json(pt.x0, pt.xv)}};
        double residual = 0.0;
        if (which == "ua-routes") {
          const AxialCstResult ua = axial_cst(h, pt.x0, pt.xv);
          const ComplexMultivector rad = axial_cst_radon(h, pt.x0, pt.xv, rule);
          residual = max_abs_diff(ua.value, rad);
          c["lhs"] = io::to_json(ua.value);
          c["rhs"] = io::to_json(rad);
          c["order"] = ua.order;
          c["remainder_bound"] = ua.remainder_bound;
        } else {
          const FueterCstResult fr = fueter_cst(h, pt.x0, pt.xv, rule);
          residual = std::max(fr.residual_commuted, fr.residual_radon);
          c["lhs"] = io::to_json(fr.value);
          c["via_commuted"] = io::to_json(fr.via_commuted);
          c["via_radon"] = io::to_json(fr.via_radon);
          c["residual_commuted"] = fr.residual_commuted;
          c["residual_radon"] = fr.residual_radon;
        }
        c["residual"] = residual;
        c["pass"] = residual < tol;
        pass = pass && residual < tol;
        cases.push_back(std::move(c));
      }
    }
  } else {
    throw std::invalid_argument("unknown cst check '" + which + "' (expected unitarity, ua-routes, fueter-routes)");
  }
  doc["cases"] = std::move(cases);
  doc["pass"] = pass;
  return {std::move(doc), pass};
}

CheckOutput fueter_check(int m, int power, const std::optional<LaurentPoly>& laurent) {
  check_dimension(m);
  if (!laurent) {
    if (power < -6 || power > 10) throw DomainError("power must be in [-6, 10]");
    const FueterResult r = tau_on_power(m, power);
    const bool pass = r.cross_check_exact ? r.residual == 0.0 : r.residual < 1e-9;
    io::Json doc = io::to_json(r);
    doc["schema"] = io::kSchemaVersion;
    doc["pass"] = pass;
    return {std::move(doc), pass};
  }
  for (const auto& [n, c] : laurent->terms())
    if (n < -6 || n > 10) throw DomainError("Laurent exponents must be in [-6, 10]");
  const ScaledSeries s = tau_on_laurent(m, *laurent);
  const double residual = laurent_image_residual(m, *laurent);
  const bool pass = residual < 1e-9;
  return {io::Json{{"schema", io::kSchemaVersion}, {"m", m}, {"laurent", io::to_json(*laurent)},
                   {"scale", io::to_json(s.scale)}, {"series", io::to_json(s.series)}, {"residual", residual},
                   {"tolerance", 1e-9}, {"pass", pass}},
          pass};
}

}  // namespace fsq
