#include "fsq/radial.hpp"

#include <cmath>
#include <limits>

namespace fsq {

RadialExpr RadialExpr::term(int a, int b, int e, const Rational& c) {
  RadialExpr r;
  r.add_term(a, b, e, c);
  return r;
}

RadialExpr RadialExpr::from_bipoly(const BiPoly& p) {
  RadialExpr r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.first, k.second, 0, c);
  return r;
}

void RadialExpr::add_term(int a, int b, int e, const Rational& c) {
  if (fsq::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b, e}, c);
  if (!inserted) {
    it->second += c;
    if (fsq::is_zero(it->second)) terms_.erase(it);
  }
}

// d/dx_0 rho^{e/2} = e x_0 rho^{(e-2)/2}
RadialExpr RadialExpr::d_x0() const {
  RadialExpr out;
  for (const auto& [k, c] : terms_) {
    const auto [a, b, e] = k;
    if (a != 0) out.add_term(a - 1, b, e, c * a);
    if (e != 0) out.add_term(a + 1, b, e - 2, c * e);
  }
  return out;
}

RadialExpr RadialExpr::d_r() const {
  RadialExpr out;
  for (const auto& [k, c] : terms_) {
    const auto [a, b, e] = k;
    if (b != 0) out.add_term(a, b - 1, e, c * b);
    if (e != 0) out.add_term(a, b + 1, e - 2, c * e);
  }
  return out;
}

RadialExpr RadialExpr::times_r(int k) const {
  RadialExpr out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    out.add_term(a, b + k, e, c);
  }
  return out;
}

RadialExpr RadialExpr::times_rho_half(int k) const {
  RadialExpr out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    out.add_term(a, b, e + k, c);
  }
  return out;
}

RadialExpr RadialExpr::scaled(const Rational& s) const {
  RadialExpr out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    out.add_term(a, b, e, c * s);
  }
  return out;
}

// x_0 -> x_0 / rho, r -> r / rho, rho -> 1 / rho.
RadialExpr RadialExpr::kelvin_substitute() const {
  RadialExpr out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    out.add_term(a, b, -2 * a - 2 * b - e, c);
  }
  return out;
}

double RadialExpr::evaluate(double x0, double r) const {
  const double rho = x0 * x0 + r * r;
  if (rho == 0.0) throw DomainError("radial expression evaluated at the origin");
  const double sr = std::sqrt(rho);
  double s = 0.0;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    if (b < 0 && r == 0.0) throw DomainError("negative power of r evaluated at r = 0");
    s += c.get_d() * std::pow(x0, a) * std::pow(r, b) * std::pow(sr, e);
  }
  return s;
}

std::pair<LaurentPoly, LaurentPoly> RadialExpr::restrict_axis() const {
  LaurentPoly even, odd;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    if (b < 0) throw DomainError("negative power of r has no axis restriction");
    if (b > 0) continue;
    // |x_0|^e = sgn(x_0)^e x_0^e
    if (e % 2 == 0) {
      even.add_term(a + e, c);
    } else {
      odd.add_term(a + e, c);
    }
  }
  return {even, odd};
}

BiPoly multiply_by_rho_power(const BiPoly& p, int q) {
  BiPoly out = p;
  for (int i = 0; i < q; ++i) {
    BiPoly next;
    for (const auto& [k, c] : out.terms()) {
      next.add_term(k.first + 2, k.second, c);
      next.add_term(k.first, k.second + 2, c);
    }
    out = std::move(next);
  }
  return out;
}

bool divide_by_rho(const BiPoly& p, BiPoly& quotient) {
  // Division by the u-monic polynomial u^2 + v^2; v exponents may be any integers.
  BiPoly rem = p;
  BiPoly q;
  while (true) {
    int best_a = -1;
    BiPoly::Key best{};
    for (const auto& [k, c] : rem.terms()) {
      if (k.first >= 2 && k.first > best_a) {
        best_a = k.first;
        best = k;
      }
    }
    if (best_a < 0) break;
    const Rational c = rem.coeff(best.first, best.second);
    q.add_term(best.first - 2, best.second, c);
    rem.add_term(best.first, best.second, -c);
    rem.add_term(best.first - 2, best.second + 2, -c);
  }
  if (!rem.is_zero()) return false;
  quotient = std::move(q);
  return true;
}

// Negative powers of x_0 and r are shifted out before expansion so that exact
// division by rho sees ordinary polynomials: class = P x_0^{shift_a} r^{shift} rho^{p/2 - s}.
BiPoly RadialExpr::expand_class(int parity, int& s, int& shift_a, int& shift) const {
  int min_e = std::numeric_limits<int>::max();
  shift_a = 0;
  shift = 0;
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    if (((e % 2) + 2) % 2 != parity) continue;
    min_e = std::min(min_e, e);
    shift_a = std::min(shift_a, a);
    shift = std::min(shift, b);
  }
  BiPoly out;
  s = 0;
  if (min_e == std::numeric_limits<int>::max()) return out;
  s = std::max(0, (parity - min_e + 1) / 2);
  for (const auto& [key, c] : terms_) {
    const auto [a, b, e] = key;
    if (((e % 2) + 2) % 2 != parity) continue;
    BiPoly t;
    t.add_term(a - shift_a, b - shift, c);
    out += multiply_by_rho_power(t, (e + 2 * s - parity) / 2);
  }
  return out;
}

bool RadialExpr::is_identically_zero() const {
  int s = 0, shift_a = 0, shift = 0;
  return expand_class(0, s, shift_a, shift).is_zero() && expand_class(1, s, shift_a, shift).is_zero();
}

bool RadialExpr::to_bipoly(BiPoly& out) const {
  int s = 0, shift_a = 0, shift = 0;
  if (!expand_class(1, s, shift_a, shift).is_zero()) return false;
  BiPoly p = expand_class(0, s, shift_a, shift);
  for (; s > 0; --s) {
    BiPoly q;
    if (!divide_by_rho(p, q)) return false;
    p = std::move(q);
  }
  BiPoly r;
  for (const auto& [k, c] : p.terms()) {
    if (k.second + shift < 0) return false;
    r.add_term(k.first + shift_a, k.second + shift, c);
  }
  out = std::move(r);
  return true;
}

RadialExpr& RadialExpr::operator+=(const RadialExpr& o) {
  for (const auto& [key, c] : o.terms_) {
    const auto [a, b, e] = key;
    add_term(a, b, e, c);
  }
  return *this;
}

RadialExpr& RadialExpr::operator-=(const RadialExpr& o) {
  for (const auto& [key, c] : o.terms_) {
    const auto [a, b, e] = key;
    add_term(a, b, e, -c);
  }
  return *this;
}

RadialExpr operator*(const RadialExpr& x, const RadialExpr& y) {
  RadialExpr out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      out.add_term(std::get<0>(kx) + std::get<0>(ky), std::get<1>(kx) + std::get<1>(ky),
                   std::get<2>(kx) + std::get<2>(ky), cx * cy);
  return out;
}

}  // namespace fsq
