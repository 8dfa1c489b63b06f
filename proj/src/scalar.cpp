#include "fsq/scalar.hpp"

#include <string>

namespace fsq {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial below -1");
  mpz_class f(1);
  for (int i = n; i > 1; i -= 2) f *= i;
  return Rational(f);
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw DomainError("negative Pochhammer length");
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

Rational rational_pow(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) result *= b;
  return result;
}

}  // namespace fsq
