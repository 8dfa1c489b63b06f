#pragma once

// Extension maps from the real line: slice extension S, the intrinsic split
// (alpha, beta), the generalized CK-extension GCK and the Appell family Q_k^m.

#include <utility>
#include <vector>

#include "fsq/laurent.hpp"
#include "fsq/polynomial.hpp"

namespace fsq {

/// Value A(x0, r) + (x_vec / r) B(x0, r) of an axial function, stored as (A, B).
struct AxialValue {
  double A = 0.0;
  double B = 0.0;
};

/// Paravector-valued Multivector for A + (x_vec / r) B.
Multivector<double> axial_to_multivector(int m, const AxialValue& v, const std::vector<double>& xv);

/// sum_j x_vec^j f_j(x_0).
struct AxialSeries {
  int m = 1;
  std::vector<LaurentPoly> coeffs;  ///< f_0 .. f_N
  int order = 0;                    ///< N
  bool exact = false;               ///< the series terminates within f_0 .. f_N

  /// (A, B) at (x0, r), r >= 0.
  AxialValue evaluate_axial(double x0, double r) const;
  Multivector<double> evaluate(double x0, const std::vector<double>& xv) const;

  /// f_0, the value on the real line.
  const LaurentPoly& restriction() const { return coeffs.at(0); }

  /// Expansion into a Clifford polynomial; requires polynomial coefficients.
  RationalPolynomial to_polynomial() const;

  /// Coefficients of D applied termwise, g_j = f_j' - c_{j+1} f_{j+1}
  /// (g_N = f_N'), i.e. D[series] = sum_j x_vec^j g_j.
  AxialSeries dirac_image() const;

  AxialSeries scaled(const Rational& s) const;

  friend bool operator==(const AxialSeries& a, const AxialSeries& b);
};

/// c_j in f_j = f_{j-1}' / c_j: j for even j, m + j - 1 for odd j.
int gck_divisor(int m, int j);

/// Truncation order used when none is given. Polynomials terminate at their degree;
/// otherwise max(top degree, 2m + 8, N_tail), where N_tail makes the binomial tail
/// bound at |x_vec| / |x_0| = 1/2 smaller than 1e-12 relative.
int gck_default_order(const LaurentPoly& f0, int m);

AxialSeries gck_extension(const LaurentPoly& f0, int m, int order);
AxialSeries gck_extension(const LaurentPoly& f0, int m);

/// Independent construction from the Bessel-function representation: the J_nu
/// Taylor coefficients Gamma(m/2) / (k! Gamma(k + nu + 1)) applied to powers of
/// |x_vec| d/dx_0. Polynomial input only.
AxialSeries gck_bessel_form(const LaurentPoly& f0, int m);

/// Slice extension S[f_0] = exp(x_vec d/dx_0) f_0.
class SliceExtension {
 public:
  SliceExtension(LaurentPoly f0, int m);

  int dim() const { return m_; }
  const LaurentPoly& initial() const { return f0_; }

  /// alpha + i beta = f_0(x_0 + i r). Throws DomainError outside |x_vec| < |x_0|
  /// when negative powers are present.
  AxialValue evaluate_axial(double x0, double r) const;
  Multivector<double> evaluate(double x0, const std::vector<double>& xv) const;
  /// Partial sums sum_{j <= order} x_vec^j f_0^{(j)}(x_0) / j!.
  Multivector<double> evaluate_series(double x0, const std::vector<double>& xv, int order) const;

  /// sum_n a_n x^n as a polynomial; requires polynomial f_0.
  RationalPolynomial to_polynomial() const;

 private:
  void check_domain(double x0, double r) const;

  LaurentPoly f0_;
  int m_;
};

SliceExtension slice_extension(const LaurentPoly& f0, int m);

/// alpha(u, v) = sum_j (-1)^j v^{2j} / (2j)! f^{(2j)}(u),
/// beta(u, v)  = sum_j (-1)^j v^{2j+1} / (2j+1)! f^{(2j+1)}(u).
struct IntrinsicPair {
  BiPoly alpha;
  BiPoly beta;
  bool exact = true;
};

/// Exact for polynomial input; otherwise truncated after the v^{order} terms.
IntrinsicPair intrinsic_split(const LaurentPoly& f0, int order = -1);

/// T_j^k(m) = k!/(m)_k ((m+1)/2)_{k-j} ((m-1)/2)_j / ((k-j)! j!).
Rational appell_T(int m, int k, int j);

/// Q_k^m := GCK[x_0^k].
RationalPolynomial appell_Q(int m, int k);

/// sum_j T_j^k(m) x^{k-j} conj(x)^j (the ordering that is monogenic).
RationalPolynomial appell_T_sum(int m, int k);

/// sum_j T_j^k(m) conj(x)^{k-j} x^j (the factor ordering as usually printed).
RationalPolynomial appell_T_sum_printed(int m, int k);

/// Restriction of a polynomial to x_vec = 0; the axis coefficients must be scalars.
LaurentPoly restrict_to_axis(const RationalPolynomial& p);

}  // namespace fsq
