#pragma once

// Multivariate polynomials in x_0, ..., x_m with Clifford coefficients, and the
// first-order operators of hypercomplex analysis acting on them from the left.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsq/clifford.hpp"

namespace fsq {

/// Exponents of x_0, ..., x_m (m <= 7).
struct Monomial {
  std::array<std::uint8_t, kMaxDimension + 1> e{};

  static Monomial unit(int var, int power = 1) {
    Monomial mo;
    mo.e[var] = static_cast<std::uint8_t>(power);
    return mo;
  }

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  /// True when only x_0 appears.
  bool on_axis() const {
    for (std::size_t j = 1; j < e.size(); ++j)
      if (e[j] != 0) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const int s = e[j] + o.e[j];
      if (s > 255) throw DomainError("monomial exponent overflow");
      r.e[j] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class OperatorTag { D, Dbar, Dirac, Laplacian, PartialX0, HypercomplexDerivative };

std::string to_string(OperatorTag tag);

template <typename S>
class CliffordPolynomial {
 public:
  using Coeff = Multivector<S>;
  using TermMap = std::map<Monomial, Coeff>;

  CliffordPolynomial() = default;
  explicit CliffordPolynomial(int m) : m_(m) {
    if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  }

  static CliffordPolynomial constant(const Coeff& c) {
    CliffordPolynomial p(c.dim());
    p.add_term(Monomial{}, c);
    return p;
  }
  static CliffordPolynomial constant(int m, const S& c) { return constant(Coeff::scalar(m, c)); }
  /// The coordinate function x_var, var = 0..m.
  static CliffordPolynomial variable(int m, int var) {
    if (var < 0 || var > m) throw DimensionMismatch("variable index out of range");
    CliffordPolynomial p(m);
    p.add_term(Monomial::unit(var), Coeff::scalar(m, S(1)));
    return p;
  }
  /// The vector variable x_vec = sum_j x_j e_j.
  static CliffordPolynomial vector_variable(int m) {
    CliffordPolynomial p(m);
    for (int j = 1; j <= m; ++j) p.add_term(Monomial::unit(j), Coeff::generator(m, j));
    return p;
  }
  /// |x_vec|^2 = sum_j x_j^2.
  static CliffordPolynomial radius_squared(int m) {
    CliffordPolynomial p(m);
    for (int j = 1; j <= m; ++j) p.add_term(Monomial::unit(j, 2), Coeff::scalar(m, S(1)));
    return p;
  }

  int dim() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [mo, c] : terms_) d = std::max(d, mo.degree());
    return d;
  }

  Coeff coeff(const Monomial& mo) const {
    auto it = terms_.find(mo);
    return it == terms_.end() ? Coeff(m_) : it->second;
  }

  void add_term(const Monomial& mo, const Coeff& c) {
    if (c.dim() != m_) throw DimensionMismatch("coefficient dimension differs from polynomial");
    for (int j = m_ + 1; j <= kMaxDimension; ++j)
      if (mo.e[j] != 0) throw DimensionMismatch("monomial uses a variable beyond x_m");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mo, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
    check_same(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, c);
    return *this;
  }
  CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
    check_same(o);
    for (const auto& [mo, c] : o.terms_) add_term(mo, -c);
    return *this;
  }
  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
  friend CliffordPolynomial operator-(const CliffordPolynomial& a) { return a.scaled(S(-1)); }

  CliffordPolynomial scaled(const S& s) const {
    CliffordPolynomial r(m_);
    for (const auto& [mo, c] : terms_) r.add_term(mo, c.scaled(s));
    return r;
  }
  /// c * p (Clifford coefficient multiplies from the left).
  CliffordPolynomial left_mul(const Coeff& c) const {
    CliffordPolynomial r(m_);
    for (const auto& [mo, v] : terms_) r.add_term(mo, c * v);
    return r;
  }
  /// p * c.
  CliffordPolynomial right_mul(const Coeff& c) const {
    CliffordPolynomial r(m_);
    for (const auto& [mo, v] : terms_) r.add_term(mo, v * c);
    return r;
  }

  /// Pointwise product; the real variables are central so only coefficients
  /// need ordering.
  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    a.check_same(b);
    CliffordPolynomial r(a.m_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) { return !(a == b); }

  /// d/dx_var.
  CliffordPolynomial partial(int var) const {
    if (var < 0 || var > m_) throw DimensionMismatch("variable index out of range");
    CliffordPolynomial r(m_);
    for (const auto& [mo, c] : terms_) {
      const int p = mo.e[var];
      if (p == 0) continue;
      Monomial d = mo;
      d.e[var] = static_cast<std::uint8_t>(p - 1);
      r.add_term(d, c.scaled(S(p)));
    }
    return r;
  }

  /// Evaluation at x = x0 + sum x_j e_j.
  Coeff evaluate(const Paravector<S>& x) const {
    if (x.dim() != m_) throw DimensionMismatch("evaluation point has wrong dimension");
    Coeff out(m_);
    for (const auto& [mo, c] : terms_) {
      S w(1);
      for (int j = 0; j <= m_; ++j) {
        const S& base = j == 0 ? x.x0 : x.xv[j - 1];
        for (int p = 0; p < mo.e[j]; ++p) w *= base;
      }
      out += c.scaled(w);
    }
    return out;
  }

  /// Restriction to x_vec = 0: coefficients of x_0^n.
  std::map<int, Coeff> restrict_axis() const {
    std::map<int, Coeff> out;
    for (const auto& [mo, c] : terms_) {
      if (!mo.on_axis()) continue;
      out.try_emplace(mo.e[0], Coeff(m_)).first->second += c;
    }
    return out;
  }

 private:
  void check_same(const CliffordPolynomial& o) const {
    if (m_ != o.m_) throw DimensionMismatch("polynomial dimension mismatch");
  }

  int m_ = 1;
  TermMap terms_;
};

using RationalPolynomial = CliffordPolynomial<Rational>;

/// Generic left action of the operators. e_j multiplies coefficients from the left.
template <typename S>
CliffordPolynomial<S> apply_operator(OperatorTag tag, const CliffordPolynomial<S>& p) {
  const int m = p.dim();
  auto dirac = [&]() {
    CliffordPolynomial<S> r(m);
    for (int j = 1; j <= m; ++j) r += p.partial(j).left_mul(Multivector<S>::generator(m, j));
    return r;
  };
  switch (tag) {
    case OperatorTag::PartialX0:
      return p.partial(0);
    case OperatorTag::Dirac:
      return dirac();
    case OperatorTag::D:
      return p.partial(0) + dirac();
    case OperatorTag::Dbar:
      return p.partial(0) - dirac();
    case OperatorTag::HypercomplexDerivative:
      return (p.partial(0) - dirac()).scaled(S(1) / S(2));
    case OperatorTag::Laplacian: {
      CliffordPolynomial<S> r(m);
      for (int j = 0; j <= m; ++j) r += p.partial(j).partial(j);
      return r;
    }
  }
  throw Unsupported("unknown operator tag");
}

/// (x_0 + x_vec)^k expanded as a polynomial; x_vec^2 = -|x_vec|^2 arises from the
/// Clifford product of the coefficients.
template <typename S = Rational>
CliffordPolynomial<S> paravector_power(int m, int k) {
  if (k < 0) throw DomainError("paravector_power needs k >= 0");
  using P = CliffordPolynomial<S>;
  const P x = P::variable(m, 0) + P::vector_variable(m);
  P r = P::constant(m, S(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

/// x_vec^j as a polynomial.
template <typename S = Rational>
CliffordPolynomial<S> vector_power(int m, int j) {
  using P = CliffordPolynomial<S>;
  const P xv = P::vector_variable(m);
  P r = P::constant(m, S(1));
  for (int i = 0; i < j; ++i) r = r * xv;
  return r;
}

/// conj(x)^j = (x_0 - x_vec)^j as a polynomial.
template <typename S = Rational>
CliffordPolynomial<S> conj_paravector_power(int m, int k) {
  using P = CliffordPolynomial<S>;
  const P x = P::variable(m, 0) - P::vector_variable(m);
  P r = P::constant(m, S(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

template <typename S>
bool is_monogenic(const CliffordPolynomial<S>& p) {
  return apply_operator(OperatorTag::D, p).is_zero();
}

/// Coefficient-wise conversion of an exact polynomial to double.
inline CliffordPolynomial<double> to_double(const RationalPolynomial& p) {
  CliffordPolynomial<double> r(p.dim());
  for (const auto& [mo, c] : p.terms()) r.add_term(mo, to_double(c));
  return r;
}

/// Evaluation of an exact polynomial at a floating point paravector.
Multivector<double> evaluate_double(const RationalPolynomial& p, double x0, const std::vector<double>& xv);

}  // namespace fsq
