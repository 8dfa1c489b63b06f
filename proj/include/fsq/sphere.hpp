#pragma once

// Integration over the unit sphere S^{m-1}: an exact rule for omega-monomials, a
// product Gauss rule and Monte Carlo. On top of it: the dual Radon transform, the
// Funk-Hecke constants and the plane wave decompositions of GCK, Q_k^m, the Cauchy
// kernel and P^{(-k)}.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fsq/fueter.hpp"
#include "fsq/simd.hpp"

namespace fsq {

enum class SphereRuleKind { ExactMonomial, ProductGauss, MonteCarlo };

struct SphereRule {
  SphereRuleKind kind = SphereRuleKind::ExactMonomial;
  int level = 0;            ///< ProductGauss: exact for omega-degree <= 2 level + 1
  std::size_t samples = 0;  ///< MonteCarlo
  std::uint64_t seed = 0;   ///< MonteCarlo

  static SphereRule exact() { return {}; }
  static SphereRule gauss(int level) { return {SphereRuleKind::ProductGauss, level, 0, 0}; }
  static SphereRule monte_carlo(std::size_t n, std::uint64_t seed) {
    return {SphereRuleKind::MonteCarlo, 0, n, seed};
  }

  bool is_numeric() const { return kind != SphereRuleKind::ExactMonomial; }
  /// "exact", "gauss:L" or "mc:N:SEED".
  std::string to_string() const;
  static SphereRule parse(const std::string& text);
};

/// Nodes omega_i (row-major, m per node) and weights with sum w_i ~ sigma_m.
struct SphereNodes {
  int m = 1;
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  const double* point(std::size_t i) const { return points.data() + i * static_cast<std::size_t>(m); }
};

/// Nodes for a numeric rule; ExactMonomial has none and throws Unsupported.
SphereNodes sphere_nodes(const SphereRule& rule, int m);

/// Gauss rule for the weight (1 - t^2)^lambda on [-1, 1] (Golub-Welsch).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_gegenbauer(int n, double lambda);

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line.
GaussRule gauss_hermite(int n);

/// (1 / sigma_m) int omega^a dS for the exponents a_1..a_m (zero when any a_j is odd).
Rational sphere_monomial_average(const std::vector<int>& a);

/// int omega^a dS = 2 prod Gamma((a_j + 1)/2) / Gamma(sum (a_j + 1)/2), pi kept symbolic.
PiScalar sphere_monomial_integral(const std::vector<int>& a);

/// Exact sphere integral = sigma * average.
struct ExactSphereIntegral {
  PiScalar sigma;
  Multivector<Rational> average;

  Multivector<double> value() const { return to_double(average).scaled(sigma.real_value()); }
};

/// A polynomial in omega_1..omega_m, stored in the slots x_1..x_m (x_0 must not appear).
ExactSphereIntegral sphere_integrate_exact(const RationalPolynomial& p);

template <typename S>
struct NumericIntegral {
  Multivector<S> value;
  double std_error = 0.0;  ///< Monte Carlo standard error (max over components), 0 otherwise
};

/// Dense component layout used while accumulating quadrature sums.
template <typename S>
constexpr int components_per_blade() {
  return is_complex_scalar_v<S> ? 2 : 1;
}

/// int f(omega) dS with a numeric rule. The integrand returns a Multivector of dim m.
template <typename S, typename F>
NumericIntegral<S> sphere_quadrature(F&& f, int m, const SphereRule& rule) {
  const SphereNodes nodes = sphere_nodes(rule, m);
  const std::size_t n = nodes.size();
  const int cpb = components_per_blade<S>();
  const std::size_t comps = (std::size_t{1} << m) * static_cast<std::size_t>(cpb);
  // Values are laid out component-major in chunks so that each component sum is
  // one contiguous weighted sum.
  constexpr std::size_t kChunk = 4096;
  std::vector<double> sums(comps, 0.0), squares(comps, 0.0);
  std::vector<double> buf;
  std::vector<double> omega(m);
  for (std::size_t start = 0; start < n; start += kChunk) {
    const std::size_t len = std::min(kChunk, n - start);
    buf.assign(comps * len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      const double* p = nodes.point(start + i);
      omega.assign(p, p + m);
      const Multivector<S> v = f(static_cast<const std::vector<double>&>(omega));
      if (v.dim() != m) throw DimensionMismatch("integrand returned the wrong dimension");
      for (const auto& [b, c] : v.terms()) {
        if constexpr (is_complex_scalar_v<S>) {
          const ComplexDouble z = to_complex(c);
          buf[(2 * b.bits) * len + i] = z.real();
          buf[(2 * b.bits + 1) * len + i] = z.imag();
        } else {
          buf[b.bits * len + i] = to_double(c);
        }
      }
    }
    const double* w = nodes.weights.data() + start;
    for (std::size_t c = 0; c < comps; ++c) {
      sums[c] += simd::weighted_sum(buf.data() + c * len, w, len);
      if (rule.kind == SphereRuleKind::MonteCarlo) squares[c] += simd::power_moment(buf.data() + c * len, w, len, 2);
    }
  }
  NumericIntegral<S> out;
  out.value = Multivector<S>(m);
  for (std::size_t c = 0; c < comps; ++c) {
    const Blade b{static_cast<std::uint32_t>(c / cpb)};
    if constexpr (is_complex_scalar_v<S>) {
      out.value.add_term(b, c % 2 == 0 ? S(sums[c], 0.0) : S(0.0, sums[c]));
    } else {
      out.value.add_term(b, S(sums[c]));
    }
  }
  if (rule.kind == SphereRuleKind::MonteCarlo && n > 1) {
    // Equal weights W = sigma / n: mean of f is sums / sigma, variance from squares.
    const double total = nodes.weights[0] * static_cast<double>(n);
    for (std::size_t c = 0; c < comps; ++c) {
      const double mean = sums[c] / total;
      const double var = std::max(0.0, squares[c] / total - mean * mean) * n / (n - 1.0);
      out.std_error = std::max(out.std_error, total * std::sqrt(var / static_cast<double>(n)));
    }
  }
  return out;
}

/// Sphere integral of an omega-polynomial with any rule (exact values converted to double).
NumericIntegral<double> sphere_integrate(const RationalPolynomial& p, const SphereRule& rule);

/// C0 with int <x, w>^j dS = C0 |x|^j and C1 with int <x, w>^j w dS = C1 |x|^{j-1} x,
/// read off the exact integral over a symbolic x.
struct FunkHeckeConstants {
  PiScalar C0;
  PiScalar C1;
};
FunkHeckeConstants funk_hecke_constants(int m, int j);

/// Dual Radon transform (1/sigma_m) int f(x_0, <x, w> w) dS of a polynomial, exact.
RationalPolynomial dual_radon(const RationalPolynomial& f);

/// Slice function evaluated along a line: alpha(x_0, t) + w beta(x_0, t) for signed t.
using SliceEvaluator = std::function<std::pair<Multivector<ComplexDouble>, Multivector<ComplexDouble>>(double, double)>;

/// Numeric dual Radon transform of a slice function at one point.
NumericIntegral<ComplexDouble> dual_radon(const SliceEvaluator& f, int m, double x0, const std::vector<double>& xv,
                                          const SphereRule& rule);

/// Slice evaluator of S[f_0] for a real Laurent polynomial f_0.
SliceEvaluator slice_evaluator(const LaurentPoly& f0, int m);

/// R[S[f_0]] against GCK[f_0]: symbolic equality under ExactMonomial (f_0 polynomial),
/// otherwise the pointwise difference at (x0, xv).
ReportEntry plane_wave_gck_check(const LaurentPoly& f0, int m, const SphereRule& rule, double x0 = 1.0,
                                 const std::vector<double>& xv = {}, double tol = 1e-10);

/// E(x) = sgn(x_0)^{m+1} / (sigma_m sigma_{m+1}) int (x_0 + <x, w> w)^{-m} dS against the
/// closed-form Cauchy kernel. Requires |x_vec| < |x_0| and a numeric rule.
ReportEntry cauchy_plane_wave_check(int m, double x0, const std::vector<double>& xv, const SphereRule& rule,
                                    double tol = 1e-8);

/// The same decomposition for P^{(-k)} with the constant lambda_m (m+k-2)! / ((k-1)! (m-1)!).
ReportEntry monomial_plane_wave_check(int m, int k, double x0, const std::vector<double>& xv, const SphereRule& rule,
                                      double tol = 1e-8);

}  // namespace fsq
