#pragma once

// Exact calculus on functions of (x_0, r) built from terms x_0^a r^b rho^{e/2},
// rho = x_0^2 + r^2. Closed forms of axial kernels live in this class.

#include <map>
#include <tuple>
#include <utility>

#include "fsq/laurent.hpp"

namespace fsq {

class RadialExpr {
 public:
  /// (a, b, e) for x_0^a r^b rho^{e/2}; a and b may be negative.
  using Key = std::tuple<int, int, int>;
  using TermMap = std::map<Key, Rational>;

  RadialExpr() = default;

  static RadialExpr term(int a, int b, int e, const Rational& c = Rational(1));
  /// Embeds a polynomial in (u, v) = (x_0, r).
  static RadialExpr from_bipoly(const BiPoly& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero_representation() const { return terms_.empty(); }
  void add_term(int a, int b, int e, const Rational& c);

  RadialExpr d_x0() const;
  RadialExpr d_r() const;
  /// r^k * f.
  RadialExpr times_r(int k) const;
  /// rho^{k/2} * f.
  RadialExpr times_rho_half(int k) const;
  RadialExpr scaled(const Rational& s) const;
  /// f(x_0 / rho, r / rho).
  RadialExpr kelvin_substitute() const;

  double evaluate(double x0, double r) const;

  /// Restriction to r = 0 written as even + sgn(x_0) * odd.
  std::pair<LaurentPoly, LaurentPoly> restrict_axis() const;

  /// Exact test for the zero function (rho^{1/2} is irrational over Q(x_0, r), so the
  /// two parity classes of e vanish separately).
  bool is_identically_zero() const;

  /// Polynomial in (x_0, r) equal to this expression, if there is one.
  bool to_bipoly(BiPoly& out) const;

  RadialExpr& operator+=(const RadialExpr& o);
  RadialExpr& operator-=(const RadialExpr& o);
  friend RadialExpr operator+(RadialExpr a, const RadialExpr& b) { return a += b; }
  friend RadialExpr operator-(RadialExpr a, const RadialExpr& b) { return a -= b; }
  friend RadialExpr operator*(const RadialExpr& a, const RadialExpr& b);

 private:
  /// Parity class p of e expanded as P with class = P x_0^{shift_a} r^{shift} rho^{p/2 - s}.
  BiPoly expand_class(int parity, int& s, int& shift_a, int& shift) const;

  TermMap terms_;
};

/// Exact division by u^2 + v^2; returns false when the remainder is non-zero.
bool divide_by_rho(const BiPoly& p, BiPoly& quotient);

/// (u^2 + v^2)^q * p.
BiPoly multiply_by_rho_power(const BiPoly& p, int q);

}  // namespace fsq
