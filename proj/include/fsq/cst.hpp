#pragma once

// Coherent state transforms on the class of Gaussian-polynomial test functions
// p(x_0) e^{-a x_0^2 + b x_0}: the heat semigroup, the classical Segal-Bargmann
// transform, the slice, axial and Fueter transforms, and the unitarity check.

#include <utility>
#include <vector>

#include "fsq/sphere.hpp"

namespace fsq {

using ComplexMultivector = Multivector<ComplexDouble>;

/// mult * q^{-1/2} * exp(exponent) * pi^{quarter_pi / 4}; kept exact so that the
/// heat flow and Hermite normalizations stay symbolic.
struct GaussConstant {
  ComplexRational mult{Rational(1)};
  Rational q{1};
  ComplexRational exponent{Rational(0)};
  int quarter_pi = 0;

  ComplexDouble value() const;
  GaussConstant operator*(const GaussConstant& o) const;
  friend bool operator==(const GaussConstant& a, const GaussConstant& b);
};

/// c * p(x_0) e^{-a x_0^2 + b x_0} with a > 0 and p Clifford-valued with complex coefficients.
class GaussPoly {
 public:
  using Coeff = Multivector<ComplexRational>;

  GaussPoly(int m, Rational a, ComplexRational b, std::vector<Coeff> poly, GaussConstant c = {});

  /// The L^2-normalized Hermite function h_n = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}.
  static GaussPoly hermite(int m, int n);
  /// e^{-a x^2} as a scalar function.
  static GaussPoly gaussian(int m, const Rational& a);

  int dim() const { return m_; }
  const Rational& a() const { return a_; }
  const ComplexRational& b() const { return b_; }
  const std::vector<Coeff>& poly() const { return poly_; }
  const GaussConstant& constant() const { return c_; }
  int degree() const { return static_cast<int>(poly_.size()) - 1; }

  GaussPoly derivative(int times = 1) const;
  GaussPoly times_x() const;
  GaussPoly scaled(const ComplexRational& s) const;
  /// Right multiplication of every coefficient by a Clifford element.
  GaussPoly right_mul(const Coeff& c) const;
  /// Sum of two functions sharing (a, b, c); throws DomainError otherwise.
  GaussPoly operator+(const GaussPoly& o) const;

  /// The entire extension evaluated at a complex point.
  ComplexMultivector evaluate(ComplexDouble z) const;
  ComplexMultivector evaluate(double x) const { return evaluate(ComplexDouble(x, 0.0)); }

  /// Taylor coefficients d_0..d_order of the entire extension around x0.
  std::vector<ComplexMultivector> taylor(double x0, int order) const;

  /// max |F(z)| over the disc |z - x0| <= R, bounded from above.
  double disc_bound(double x0, double R) const;

  /// Unitary Fourier transform (1/sqrt(2 pi)) int f(x) e^{-i p x} dx, as a GaussPoly in p.
  GaussPoly fourier_transform() const;

  friend bool operator==(const GaussPoly& f, const GaussPoly& g);

 private:
  void trim();

  int m_ = 1;
  Rational a_;
  ComplexRational b_;
  std::vector<Coeff> poly_;
  GaussConstant c_;
};

/// e^{Delta_0 / 2} f = (1/sqrt(2 pi)) int e^{-(x_0 - y)^2/2} f(y) dy, in closed form:
/// a' = a/(1+2a), b' = b/(1+2a).
GaussPoly heat_semigroup(const GaussPoly& f);

/// The same convolution by Gauss-Hermite quadrature, for cross-checking.
ComplexMultivector heat_semigroup_quadrature(const GaussPoly& f, double x0, int nodes = 80);

/// U[f](z), the holomorphic extension of the heat flow.
ComplexMultivector classical_cst(const GaussPoly& f, ComplexDouble z);

/// alpha + w beta of a slice function at (x_0, r).
struct SliceValue {
  ComplexMultivector alpha;
  ComplexMultivector beta;

  /// alpha + (x_vec / r) beta; at r = 0 only alpha contributes.
  ComplexMultivector at(const std::vector<double>& xv) const;
};

/// U_s[f] = S[e^{Delta_0/2} f] via F(x_0 +- i r).
SliceValue slice_cst(const GaussPoly& f, double x0, double r);

/// U_s[f] from its Fourier representation (1/sqrt(2 pi)) int e^{-p^2/2} e^{i p x_0}
/// (cosh(p r), i sinh(p r)) f~(p) dp, by the trapezoid rule.
SliceValue slice_cst_fourier(const GaussPoly& f, double x0, double r);

/// Slice evaluator t -> U_s[f](x_0, t) for the dual Radon transform.
SliceEvaluator slice_cst_evaluator(const GaussPoly& f);

struct AxialCstResult {
  ComplexMultivector value;
  int order = 0;
  double remainder_bound = 0.0;
};

/// GCK of a non-polynomial function at one point: the Taylor polynomial of degree N
/// of F around x0, with the Cauchy bound M(R) (r/R)^{N+1} / (1 - r/R) on the tail.
/// order = -1 picks the smallest N whose bound is below tol; a fixed order whose bound
/// exceeds tol throws DomainError.
AxialCstResult gck_of_entire(const GaussPoly& F, double x0, const std::vector<double>& xv, int order = -1,
                             double tol = 1e-10);

/// U_a[f] = GCK[e^{Delta_0/2} f].
AxialCstResult axial_cst(const GaussPoly& f, double x0, const std::vector<double>& xv, int order = -1,
                         double tol = 1e-10);

/// U_a[f] along the second route R[U_s[f]], with a numeric sphere rule.
ComplexMultivector axial_cst_radon(const GaussPoly& f, double x0, const std::vector<double>& xv,
                                   const SphereRule& rule);

/// tau_m S e^{Delta_0/2} f along three routes.
struct FueterCstResult {
  ComplexMultivector value;         ///< gamma_m GCK[d^{m-1} heat(f)]
  ComplexMultivector via_commuted;  ///< gamma_m U_a[d^{m-1} f]
  ComplexMultivector via_radon;     ///< gamma_m R[U_s[d^{m-1} f]]
  double residual_commuted = 0.0;
  double residual_radon = 0.0;
  double remainder_bound = 0.0;
};

FueterCstResult fueter_cst(const GaussPoly& f, double x0, const std::vector<double>& xv,
                           const SphereRule& rule = SphereRule::gauss(24), double tol = 1e-10);

/// The measure dv_m = (2/sqrt(pi)) (1/sigma_m) e^{-r^2} r^{1-m} dx_0 dx_vec, reduced to
/// the half-plane (x_0, r > 0).
struct MeasureDvm {
  int m = 1;
  /// (2/sqrt(pi)) int_0^inf e^{-r^2} dr, which must be 1.
  double radial_mass(int nodes = 32) const;
};

struct UnitarityResult {
  ComplexMultivector lhs;
  ComplexMultivector rhs;         ///< finer level
  ComplexMultivector rhs_coarse;  ///< coarser level
  double residual = 0.0;
  double coarse_residual = 0.0;
  std::pair<int, int> levels{24, 48};
  bool converged = false;  ///< the finer level did not get worse
};

/// <f, g> = int f^dagger g dx_0 against the same inner product of U_s f, U_s g over
/// dv_m, with the sphere directions integrated exactly.
UnitarityResult unitarity_check(const GaussPoly& f, const GaussPoly& g, std::pair<int, int> levels = {24, 48});

}  // namespace fsq
