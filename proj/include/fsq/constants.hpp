#pragma once

#include <string>

#include "fsq/scalar.hpp"

namespace fsq {

/// coeff * pi^{half_power / 2}, coeff in Q(i). Keeps pi symbolic so that
/// identities in which pi cancels remain exact.
struct PiScalar {
  ComplexRational coeff;
  int half_power = 0;

  PiScalar() = default;
  PiScalar(ComplexRational c, int hp = 0) : coeff(std::move(c)), half_power(hp) {}  // NOLINT
  PiScalar(const Rational& c, int hp = 0) : coeff(c), half_power(hp) {}             // NOLINT

  bool is_zero() const { return fsq::is_zero(coeff); }
  bool is_real() const { return fsq::is_zero(coeff.im); }
  /// True when no power of pi remains (the value lies in Q(i)).
  bool is_algebraic() const { return half_power == 0 || is_zero(); }

  ComplexDouble value() const;
  double real_value() const { return value().real(); }

  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    return PiScalar(a.coeff * b.coeff, a.half_power + b.half_power);
  }
  friend PiScalar operator/(const PiScalar& a, const PiScalar& b) {
    return PiScalar(a.coeff / b.coeff, a.half_power - b.half_power);
  }
  friend PiScalar operator-(const PiScalar& a) { return PiScalar(-a.coeff, a.half_power); }
  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.coeff == b.coeff && a.half_power == b.half_power;
  }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

  std::string to_string() const;
};

/// Gamma(n/2) for a positive integer n.
PiScalar gamma_half(int n);

/// Surface area of S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
PiScalar sphere_area(int n);

/// i^{e} for any integer e.
ComplexRational i_power(int e);

struct DimensionConstants {
  int m = 1;
  PiScalar sigma_m;   ///< area of S^{m-1}
  PiScalar sigma_m1;  ///< area of S^m
  PiScalar lambda_m;  ///< 2^{m-1} Gamma((m+1)/2)^2
  PiScalar gamma_m;   ///< i^{1-m} 2^{m-1} Gamma((m+1)/2)^2 / (m-1)!
};

DimensionConstants constants(int m);

/// (-1)^{(m-1)/2} (m-1)!! / (m-2)!!, the odd-m closed form of gamma_m.
Rational gamma_odd_closed_form(int m);

}  // namespace fsq
