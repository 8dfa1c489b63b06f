#include "fsq/constants.hpp"

#include <cmath>
#include <numbers>

namespace fsq {

ComplexDouble PiScalar::value() const {
  const double scale = std::pow(std::numbers::pi, 0.5 * half_power);
  return to_complex(coeff) * scale;
}

std::string PiScalar::to_string() const {
  std::string s = "(" + format_rational(coeff.re);
  if (!fsq::is_zero(coeff.im)) s += (sgn(coeff.im) < 0 ? " - " : " + ") + format_rational(abs(coeff.im)) + "i";
  s += ")";
  if (half_power != 0) s += "*pi^(" + std::to_string(half_power) + "/2)";
  return s;
}

PiScalar gamma_half(int n) {
  if (n <= 0) throw DomainError("gamma_half needs a positive argument");
  if (n % 2 == 0) return PiScalar(factorial(n / 2 - 1), 0);
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = (n - 1) / 2;
  Rational c = factorial(2 * k) / (rational_pow(Rational(4), k) * factorial(k));
  return PiScalar(c, 1);
}

PiScalar sphere_area(int n) {
  if (n <= 0) throw DomainError("sphere_area needs n >= 1");
  return PiScalar(Rational(2), n) / gamma_half(n);
}

ComplexRational i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return ComplexRational(Rational(1), Rational(0));
    case 1: return ComplexRational(Rational(0), Rational(1));
    case 2: return ComplexRational(Rational(-1), Rational(0));
    default: return ComplexRational(Rational(0), Rational(-1));
  }
}

DimensionConstants constants(int m) {
  if (m < 1) throw DomainError("dimension must be positive");
  DimensionConstants c;
  c.m = m;
  c.sigma_m = sphere_area(m);
  c.sigma_m1 = sphere_area(m + 1);
  const PiScalar g = gamma_half(m + 1);
  c.lambda_m = PiScalar(rational_pow(Rational(2), m - 1), 0) * g * g;
  c.gamma_m = PiScalar(i_power(1 - m), 0) * c.lambda_m / PiScalar(factorial(m - 1), 0);
  return c;
}

Rational gamma_odd_closed_form(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("odd-m closed form needs odd m");
  Rational sign = ((m - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * double_factorial(m - 1) / double_factorial(m - 2);
}

}  // namespace fsq
