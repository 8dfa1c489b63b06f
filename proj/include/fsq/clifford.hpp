#pragma once

// Real and complexified Clifford algebras R_m / C_m with e_j e_l + e_l e_j = -2 delta_jl.
// Elements are sparse, canonically ordered blade tables over a generic scalar field.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsq/scalar.hpp"

namespace fsq {

inline constexpr int kMaxDimension = 7;

/// e_A for a multi-index A, encoded as a bitset: bit j set <=> e_{j+1} is a factor.
struct Blade {
  std::uint32_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t b) : bits(b) {}

  /// Generator e_j, j = 1..m.
  static constexpr Blade generator(int j) { return Blade(1u << (j - 1)); }

  constexpr int grade() const { return std::popcount(bits); }
  constexpr bool is_scalar() const { return bits == 0; }

  /// Generator indices j_1 < ... < j_k (1-based).
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// Sign of e_A e_B = sign * e_{A xor B}: transposition count plus one -1 per
/// contracted generator.
constexpr int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (std::uint32_t t = a.bits >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b.bits);
  swaps += std::popcount(a.bits & b.bits);
  return (swaps & 1) ? -1 : 1;
}

/// Sign picked up by e_A under Clifford conjugation: (-1)^{k(k+1)/2}.
constexpr int conjugation_sign(Blade a) {
  const int k = a.grade();
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

template <typename S>
class Multivector {
 public:
  using scalar_type = S;
  using Term = std::pair<Blade, S>;

  Multivector() = default;
  explicit Multivector(int m) : m_(m) { check_dim(m); }

  static Multivector scalar(int m, S value) {
    Multivector r(m);
    r.add_term(Blade{}, std::move(value));
    return r;
  }
  static Multivector generator(int m, int j, S value = S(1)) {
    if (j < 1 || j > m) throw DimensionMismatch("generator index out of range");
    Multivector r(m);
    r.add_term(Blade::generator(j), std::move(value));
    return r;
  }
  static Multivector blade(int m, Blade b, S value = S(1)) {
    Multivector r(m);
    r.add_term(b, std::move(value));
    return r;
  }
  /// Grade-1 element sum_j v_j e_j.
  static Multivector vector(int m, std::span<const S> v) {
    if (static_cast<int>(v.size()) != m) throw DimensionMismatch("vector length differs from m");
    Multivector r(m);
    for (int j = 0; j < m; ++j) r.add_term(Blade::generator(j + 1), v[j]);
    return r;
  }

  int dim() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_scalar()); }

  S coeff(Blade b) const {
    auto it = find(b);
    return (it != terms_.end() && it->first == b) ? it->second : S(0);
  }
  S scalar_part() const { return coeff(Blade{}); }

  /// Accumulates value into the coefficient of b, keeping canonical form.
  void add_term(Blade b, const S& value) {
    if (b.bits >= (1u << m_)) throw DimensionMismatch("blade outside dimension");
    if (fsq::is_zero(value)) return;
    auto it = find(b);
    if (it != terms_.end() && it->first == b) {
      it->second += value;
      if (fsq::is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, Term(b, value));
    }
  }

  Multivector grade(int k) const {
    Multivector r(m_);
    for (const auto& [b, c] : terms_)
      if (b.grade() == k) r.terms_.emplace_back(b, c);
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, S(-c));
    return *this;
  }
  Multivector scaled(const S& s) const {
    Multivector r(m_);
    if (fsq::is_zero(s)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [b, c] : terms_) {
      S v = c * s;
      if (!fsq::is_zero(v)) r.terms_.emplace_back(b, std::move(v));
    }
    return r;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) { return a.scaled(S(-1)); }
  friend Multivector operator*(const Multivector& a, const S& s) { return a.scaled(s); }
  friend Multivector operator*(const S& s, const Multivector& a) { return a.scaled(s); }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        S v = ca * cb;
        if (blade_product_sign(ba, bb) < 0) v = -v;
        raw.emplace_back(Blade(ba.bits ^ bb.bits), std::move(v));
      }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& x, const Term& y) { return x.first < y.first; });
    Multivector r(a.m_);
    for (auto& t : raw) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second += t.second;
      } else {
        if (!r.terms_.empty() && fsq::is_zero(r.terms_.back().second)) r.terms_.pop_back();
        r.terms_.push_back(std::move(t));
      }
    }
    if (!r.terms_.empty() && fsq::is_zero(r.terms_.back().second)) r.terms_.pop_back();
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  /// Euclidean norm of the coefficient vector.
  double norm() const {
    double s = 0.0;
    for (const auto& [b, c] : terms_) {
      const double v = magnitude(c);
      s += v * v;
    }
    return std::sqrt(s);
  }

 private:
  static void check_dim(int m) {
    if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  }
  void check_same(const Multivector& o) const {
    if (m_ != o.m_) throw DimensionMismatch("Clifford dimension mismatch");
  }
  typename std::vector<Term>::iterator find(Blade b) {
    return std::lower_bound(terms_.begin(), terms_.end(), b,
                            [](const Term& t, Blade key) { return t.first < key; });
  }
  typename std::vector<Term>::const_iterator find(Blade b) const {
    return std::lower_bound(terms_.begin(), terms_.end(), b,
                            [](const Term& t, Blade key) { return t.first < key; });
  }

  int m_ = 1;
  std::vector<Term> terms_;
};

template <typename S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

/// Anti-automorphism with conj(e_j) = -e_j.
template <typename S>
Multivector<S> clifford_conjugate(const Multivector<S>& a) {
  Multivector<S> r(a.dim());
  for (const auto& [b, c] : a.terms()) r.add_term(b, conjugation_sign(b) < 0 ? S(-c) : c);
  return r;
}

/// (a + i b)^dagger = conj(a) - i conj(b).
template <typename S>
Multivector<S> hermitian_conjugate(const Multivector<S>& a) {
  static_assert(is_complex_scalar_v<S>, "hermitian conjugation needs a complexified field");
  Multivector<S> r(a.dim());
  for (const auto& [b, c] : a.terms()) {
    S v = central_conj(c);
    r.add_term(b, conjugation_sign(b) < 0 ? S(-v) : v);
  }
  return r;
}

/// Coefficient-wise field conversion (e.g. Rational -> double).
template <typename T, typename S, typename F>
Multivector<T> convert(const Multivector<S>& a, F&& f) {
  Multivector<T> r(a.dim());
  for (const auto& [b, c] : a.terms()) r.add_term(b, f(c));
  return r;
}

inline Multivector<double> to_double(const Multivector<Rational>& a) {
  return convert<double>(a, [](const Rational& q) { return q.get_d(); });
}
template <typename S>
Multivector<ComplexDouble> to_complex(const Multivector<S>& a) {
  return convert<ComplexDouble>(a, [](const S& q) { return fsq::to_complex(q); });
}

/// max_A |a_A - b_A|.
template <typename S>
double max_abs_diff(const Multivector<S>& a, const Multivector<S>& b) {
  double d = 0.0;
  const Multivector<S> diff = a - b;
  for (const auto& [bl, c] : diff.terms()) d = std::max(d, magnitude(c));
  return d;
}

/// x = x0 + sum_j x_j e_j.
template <typename S>
struct Paravector {
  S x0{};
  std::vector<S> xv;

  int dim() const { return static_cast<int>(xv.size()); }

  Multivector<S> to_multivector() const {
    Multivector<S> r = Multivector<S>::vector(dim(), std::span<const S>(xv));
    r.add_term(Blade{}, x0);
    return r;
  }
  Paravector conj() const {
    Paravector r{x0, xv};
    for (auto& v : r.xv) v = -v;
    return r;
  }
  /// sum_{j=0}^m x_j^2.
  S norm_squared() const {
    S s = x0 * x0;
    for (const auto& v : xv) s += v * v;
    return s;
  }
  /// |x_vec|^2.
  S vector_norm_squared() const {
    S s(0);
    for (const auto& v : xv) s += v * v;
    return s;
  }
};

}  // namespace fsq
