#include "fsq/laurent.hpp"

#include <cmath>

namespace fsq {

LaurentPoly::LaurentPoly(TermMap terms) {
  for (auto& [n, c] : terms) add_term(n, c);
}

LaurentPoly LaurentPoly::monomial(int n, const Rational& c) {
  LaurentPoly p;
  p.add_term(n, c);
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int n, const Rational& c) {
  if (fsq::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (fsq::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::derivative(int times) const {
  if (times < 0) throw DomainError("negative derivative order");
  LaurentPoly cur = *this;
  for (int t = 0; t < times; ++t) {
    LaurentPoly next;
    for (const auto& [n, c] : cur.terms_)
      if (n != 0) next.add_term(n - 1, c * n);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly r;
  for (const auto& [n, c] : terms_) r.add_term(n + shift, c);
  return r;
}

LaurentPoly LaurentPoly::kelvin_axis(int m) const {
  LaurentPoly r;
  for (const auto& [n, c] : terms_) r.add_term(-m - n, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  LaurentPoly r;
  for (const auto& [n, c] : terms_) r.add_term(n, c * s);
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (!is_polynomial() && fsq::is_zero(x)) throw DomainError("Laurent polynomial evaluated at 0");
  Rational s(0);
  for (const auto& [n, c] : terms_) s += c * rational_pow(x, n);
  return s;
}

double LaurentPoly::evaluate(double x) const {
  if (!is_polynomial() && x == 0.0) throw DomainError("Laurent polynomial evaluated at 0");
  double s = 0.0;
  for (const auto& [n, c] : terms_) s += c.get_d() * std::pow(x, n);
  return s;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const {
  if (!is_polynomial() && z == 0.0) throw DomainError("Laurent polynomial evaluated at 0");
  std::complex<double> s = 0.0;
  for (const auto& [n, c] : terms_) s += c.get_d() * std::pow(z, n);
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) r.add_term(na + nb, ca * cb);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [n, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + format_rational(c) + ")";
    if (n != 0) s += "*x0^" + std::to_string(n);
  }
  return s;
}

void BiPoly::add_term(int a, int b, const Rational& c) {
  if (b < 0) throw DomainError("negative v exponent");
  if (fsq::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (fsq::is_zero(it->second)) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int a, int b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::partial_u() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first != 0) r.add_term(k.first - 1, k.second, c * k.first);
  return r;
}

BiPoly BiPoly::partial_v() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second != 0) r.add_term(k.first, k.second - 1, c * k.second);
  return r;
}

BiPoly BiPoly::reflect_v() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, k.second % 2 ? Rational(-c) : c);
  return r;
}

bool BiPoly::is_v_even() const {
  for (const auto& [k, c] : terms_)
    if (k.second % 2 != 0) return false;
  return true;
}

bool BiPoly::is_v_odd() const {
  for (const auto& [k, c] : terms_)
    if (k.second % 2 == 0) return false;
  return true;
}

double BiPoly::evaluate(double u, double v) const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += c.get_d() * std::pow(u, k.first) * std::pow(v, k.second);
  return s;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r;
  for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

}  // namespace fsq
