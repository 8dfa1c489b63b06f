#include <immintrin.h>

#include "fsq/scalar.hpp"
#include "fsq/simd.hpp"

namespace fsq::simd::avx2 {

namespace {

__attribute__((target("avx2,fma"))) double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

__attribute__((target("avx2,fma"))) double weighted_sum(const double* v, const double* w, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(v + i), _mm256_loadu_pd(w + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(v + i + 4), _mm256_loadu_pd(w + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(v + i), _mm256_loadu_pd(w + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += v[i] * w[i];
  return s;
}

__attribute__((target("avx2,fma"))) double power_moment(const double* x, const double* w, std::size_t n, int k) {
  if (k < 0) throw DomainError("power_moment needs k >= 0");
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    __m256d p = _mm256_set1_pd(1.0);
    for (int j = 0; j < k; ++j) p = _mm256_mul_pd(p, xv);
    acc = _mm256_fmadd_pd(p, _mm256_loadu_pd(w + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= x[i];
    s += w[i] * p;
  }
  return s;
}

__attribute__((target("avx2,fma"))) void geometric_product(int m, const float* a, const float* b, float* out) {
  if (m < 3) {
    scalar::geometric_product(m, a, b, out);
    return;
  }
  const float* sign = product_sign_table(m);
  const std::uint32_t n = 1u << m;
  for (std::uint32_t c = 0; c < n; ++c) out[c] = 0.0f;
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0.0f) continue;
    const __m256 ai = _mm256_set1_ps(a[i]);
    // Within an aligned block of 8 outputs c, the partner index i ^ c stays in one
    // aligned block of b, permuted by the low three bits of i.
    const __m256i perm = _mm256_xor_si256(lane, _mm256_set1_epi32(static_cast<int>(i & 7u)));
    const float* row = sign + static_cast<std::size_t>(i) * n;
    for (std::uint32_t c = 0; c < n; c += 8) {
      const __m256 bb = _mm256_loadu_ps(b + ((i ^ c) & ~7u));
      const __m256 bp = _mm256_permutevar8x32_ps(bb, perm);
      const __m256 prod = _mm256_mul_ps(_mm256_mul_ps(ai, bp), _mm256_loadu_ps(row + c));
      _mm256_storeu_ps(out + c, _mm256_add_ps(_mm256_loadu_ps(out + c), prod));
    }
  }
}

}  // namespace fsq::simd::avx2
