#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace fsq {

/// Arbitrary precision rational, always kept canonical (lowest terms, positive
/// denominator) by GMP.
using Rational = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Unsupported : std::logic_error {
  using std::logic_error::logic_error;
};

/// Complex numbers over an exact field. The imaginary unit is central when
/// used as a Clifford coefficient.
template <typename T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return Complex(T(0), T(1)); }

  Complex conj() const { return Complex(re, T(-im)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T den = o.re * o.re + o.im * o.im;
    if (den == 0) throw DomainError("complex division by zero");
    T r = (re * o.re + im * o.im) / den;
    T i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(T(-a.re), T(-a.im)); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

using ComplexRational = Complex<Rational>;
using ComplexDouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Scalar field operations used by the generic containers.

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const ComplexRational& x) { return is_zero(x.re) && is_zero(x.im); }
inline bool is_zero(const ComplexDouble& x) { return x.real() == 0.0 && x.imag() == 0.0; }

/// Conjugation of the central imaginary unit; identity on real fields.
inline Rational central_conj(const Rational& x) { return x; }
inline double central_conj(double x) { return x; }
inline ComplexRational central_conj(const ComplexRational& x) { return x.conj(); }
inline ComplexDouble central_conj(const ComplexDouble& x) { return std::conj(x); }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

inline ComplexDouble to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline ComplexDouble to_complex(double x) { return {x, 0.0}; }
inline ComplexDouble to_complex(const ComplexRational& x) { return {x.re.get_d(), x.im.get_d()}; }
inline ComplexDouble to_complex(const ComplexDouble& x) { return x; }

/// Magnitude used for numeric residuals.
inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const ComplexRational& x) { return std::abs(to_complex(x)); }
inline double magnitude(const ComplexDouble& x) { return std::abs(x); }

template <typename S>
inline constexpr bool is_complex_scalar_v =
    std::is_same_v<S, ComplexRational> || std::is_same_v<S, ComplexDouble>;

template <typename S>
inline constexpr bool is_exact_scalar_v =
    std::is_same_v<S, Rational> || std::is_same_v<S, ComplexRational>;

/// Builds a scalar of field S from an exact rational.
template <typename S>
S from_rational(const Rational& q) {
  if constexpr (std::is_same_v<S, Rational>) {
    return q;
  } else if constexpr (std::is_same_v<S, ComplexRational>) {
    return ComplexRational(q);
  } else if constexpr (std::is_same_v<S, double>) {
    return q.get_d();
  } else {
    return ComplexDouble(q.get_d(), 0.0);
  }
}

Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p" or "-p/q".
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q".
std::string format_rational(const Rational& q);

Rational factorial(int n);
Rational binomial(int n, int k);
/// n!! with (-1)!! = 0!! = 1.
Rational double_factorial(int n);
/// Rising factorial (a)_n.
Rational pochhammer(const Rational& a, int n);
Rational rational_pow(const Rational& base, int exponent);

}  // namespace fsq
