#pragma once

// Closed-form axial functions: the Cauchy kernel, Kelvin inversion, the monogenic
// monomials P^{(-k)}, P^{(k-1)} and their GCK representations.

#include <functional>
#include <utility>
#include <vector>

#include "fsq/constants.hpp"
#include "fsq/extension.hpp"
#include "fsq/radial.hpp"
#include "fsq/report.hpp"

namespace fsq {

/// scale * sgn(x_0)^{sign_power} * (A(x_0, r) + (x_vec / r) B(x_0, r)), defined off x = 0.
struct AxialClosedForm {
  int m = 1;
  PiScalar scale{Rational(1), 0};
  RadialExpr A;
  RadialExpr B;
  int sign_power = 0;

  /// Requires a real scale.
  AxialValue evaluate_axial(double x0, double r) const;
  std::pair<ComplexDouble, ComplexDouble> evaluate_axial_complex(double x0, double r) const;
  Multivector<double> evaluate(double x0, const std::vector<double>& xv) const;

  AxialClosedForm d_x0() const;
};

/// A symbolic polynomial times a pi-tracked constant.
struct ScaledPolynomial {
  PiScalar scale{Rational(1), 0};
  RationalPolynomial poly;

  /// Folds the scale into the polynomial when it is a real rational.
  ScaledPolynomial normalized() const;
  /// Exact equality of scale * poly.
  friend bool operator==(const ScaledPolynomial& a, const ScaledPolynomial& b);
  friend bool operator!=(const ScaledPolynomial& a, const ScaledPolynomial& b) { return !(a == b); }
};

/// E(x) = conj(x) / (sigma_{m+1} |x|^{m+1}).
AxialClosedForm cauchy_kernel(int m);

/// Symbolic Kelvin inversion I[f](x) = conj(x)/|x|^{m+1} f(conj(x)/|x|^2) of a closed form.
AxialClosedForm kelvin_inversion(const AxialClosedForm& f);

/// Pointwise Kelvin inversion of any evaluable function.
using PointFunction = std::function<Multivector<double>(double, const std::vector<double>&)>;
Multivector<double> kelvin_inversion(const PointFunction& f, int m, double x0, const std::vector<double>& xv);

struct MonogenicMonomial {
  int order = 0;  ///< -k for P^{(-k)}, k-1 >= 0 for P^{(k-1)}
  int m = 1;
  AxialClosedForm closed_form;
};

/// P^{(-k)} = (-1)^{k-1} sigma_{m+1} lambda_m / (k-1)! d^{k-1}E for order = -k,
/// P^{(k-1)} = I[P^{(-k)}] for order = k - 1 >= 0.
MonogenicMonomial monogenic_monomial(int m, int order);

/// Expansion of a closed form whose A is a polynomial in (x_0, r^2) and whose B is
/// r times such a polynomial. Throws Unsupported otherwise.
ScaledPolynomial closed_form_to_polynomial(const AxialClosedForm& f);

/// Even polynomial in v (= r) as a Clifford polynomial via r^2 = sum x_j^2.
RationalPolynomial radial_polynomial(int m, const BiPoly& even_in_r);

/// lambda_m (m+k-2)! / ((k-1)! (m-1)!).
PiScalar prop45_constant(int m, int k);

/// Checks the four GCK representations of P^{(-k)}, P^{(k-1)} and the axis restriction.
/// The Laurent identities use GCK truncated at `order` and points with |x_vec| / |x_0| = ratio
/// on both half-axes; order = -1 uses the default truncation of gck_extension.
std::vector<ReportEntry> verify_prop45(int m, int k, int order = 20, double ratio = 0.4, double tol = 1e-8);

/// Maximum componentwise difference |A1 - A2|, |B1 - B2| over the given (x0, r) points.
double axial_max_diff(const std::function<std::pair<ComplexDouble, ComplexDouble>(double, double)>& f,
                      const std::function<std::pair<ComplexDouble, ComplexDouble>(double, double)>& g,
                      const std::vector<std::pair<double, double>>& points);

}  // namespace fsq
