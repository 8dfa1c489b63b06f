#pragma once

// Univariate Laurent polynomials in x_0 and bivariate (u, v) polynomials used for
// the intrinsic split alpha + i beta of a holomorphic function.

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "fsq/scalar.hpp"

namespace fsq {

/// sum_n a_n x^n, n in Z, rational a_n. Clifford-valued data f_0 * c is handled by
/// right linearity of every map in this library.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(TermMap terms);

  static LaurentPoly monomial(int n, const Rational& c = Rational(1));
  static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int n) const;

  void add_term(int n, const Rational& c);

  LaurentPoly derivative(int times = 1) const;
  /// x^shift * f.
  LaurentPoly shifted(int shift) const;
  /// x^{-m} f(1/x).
  LaurentPoly kelvin_axis(int m) const;
  LaurentPoly scaled(const Rational& s) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// sum c_{a,b} u^a v^b with a in Z and b >= 0.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Rational>;

  BiPoly() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int a, int b, const Rational& c);
  Rational coeff(int a, int b) const;

  BiPoly partial_u() const;
  BiPoly partial_v() const;
  /// p(u, -v).
  BiPoly reflect_v() const;
  bool is_v_even() const;
  bool is_v_odd() const;

  double evaluate(double u, double v) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  TermMap terms_;
};

}  // namespace fsq
