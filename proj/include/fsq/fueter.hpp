#pragma once

// The Fueter-Sce-Qian map tau_m, realized as gamma_m GCK d^{m-1}, together with the
// odd-dimensional Laplacian route and the explicit (A, B) formulas used to cross-check it.

#include <optional>
#include <string>

#include "fsq/kernels.hpp"

namespace fsq {

enum class FueterBranch { Negative, Kernel, Positive };

std::string to_string(FueterBranch b);

struct FueterResult {
  int m = 1;
  int power = 0;
  FueterBranch branch = FueterBranch::Kernel;
  /// Output = scale * (polynomial or series). The scale is folded into the
  /// polynomial whenever it is a real rational (odd m).
  PiScalar scale{Rational(1), 0};
  std::optional<RationalPolynomial> polynomial;
  std::optional<AxialSeries> series;
  /// Independent closed form from the monogenic monomials:
  /// i^{1-m} sgn(-x_0)^{m-1} P^{(l)} for l < 0, i^{1-m} P^{(l+1-m)} for l >= m - 1.
  std::optional<AxialClosedForm> closed_form;
  bool cross_check_exact = true;
  double residual = 0.0;
};

/// tau_m[x^l]. For l < 0 the series is truncated at `order` (default order when -1);
/// the closed-form residual is measured on |x_vec| <= |x_0| / 2.
FueterResult tau_on_power(int m, int l, int order = -1);

struct ScaledSeries {
  PiScalar scale{Rational(1), 0};
  AxialSeries series;
};

/// gamma_m GCK[f_0^{(m-1)}].
ScaledSeries tau_on_laurent(int m, const LaurentPoly& f0, int order = -1);

/// Slice extension S[f_0] = alpha + w beta as an exact closed form in (x_0, r).
AxialClosedForm slice_closed_form(const LaurentPoly& f0, int m);

/// One application of the Laplacian to an axial function A + w B:
/// A -> A_00 + A_rr + (m-1) A_r / r, B = r h -> r (h_00 + h_rr + (m+1) h_r / r).
AxialClosedForm axial_laplacian(const AxialClosedForm& f);

struct LaplacianRouteResult {
  std::optional<RationalPolynomial> polynomial;    ///< polynomial input
  std::optional<AxialClosedForm> closed_form;      ///< Laurent input
};

/// Delta^{(m-1)/2} S[f_0] for odd m.
LaplacianRouteResult laplacian_power_route(int m, const LaurentPoly& f0);

/// A = (m-1)!! (r^{-1} d_r)^{(m-1)/2} alpha, B = (m-1)!! (d_r r^{-1})^{(m-1)/2} beta.
AxialClosedForm lemma41_AB(int m, const IntrinsicPair& pair);

}  // namespace fsq
