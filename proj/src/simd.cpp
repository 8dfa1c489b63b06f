#include "fsq/simd.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "fsq/clifford.hpp"

namespace fsq::simd {

namespace {

constexpr int kNoOverride = -1;
std::atomic<int> g_override{kNoOverride};

Backend detect() {
  if (std::getenv("FSQ_FORCE_SCALAR") != nullptr) return Backend::Scalar;
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

const char* to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() {
  const int o = g_override.load(std::memory_order_relaxed);
  if (o != kNoOverride) return static_cast<Backend>(o);
  static const Backend detected = detect();
  return detected;
}

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) throw Unsupported("AVX2/FMA not available on this CPU");
  g_override.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_override.store(kNoOverride, std::memory_order_relaxed); }

const float* product_sign_table(int m) {
  if (m < 1 || m > kMaxDimension) throw DimensionMismatch("Clifford dimension must be in [1, 7]");
  static std::array<std::vector<float>, kMaxDimension + 1> tables;
  static std::array<std::once_flag, kMaxDimension + 1> flags;
  std::call_once(flags[m], [m] {
    const std::uint32_t n = 1u << m;
    auto& t = tables[m];
    t.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t c = 0; c < n; ++c)
        t[a * n + c] = static_cast<float>(blade_product_sign(Blade{a}, Blade{a ^ c}));
  });
  return tables[m].data();
}

namespace scalar {

double weighted_sum(const double* v, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * w[i];
  return s;
}

double power_moment(const double* x, const double* w, std::size_t n, int k) {
  if (k < 0) throw DomainError("power_moment needs k >= 0");
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= x[i];
    s += w[i] * p;
  }
  return s;
}

void geometric_product(int m, const float* a, const float* b, float* out) {
  const float* sign = product_sign_table(m);
  const std::uint32_t n = 1u << m;
  for (std::uint32_t c = 0; c < n; ++c) out[c] = 0.0f;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0.0f) continue;
    const float* row = sign + static_cast<std::size_t>(i) * n;
    for (std::uint32_t c = 0; c < n; ++c) out[c] += a[i] * b[i ^ c] * row[c];
  }
}

}  // namespace scalar

double weighted_sum(const double* v, const double* w, std::size_t n) {
  return active_backend() == Backend::Avx2 ? avx2::weighted_sum(v, w, n) : scalar::weighted_sum(v, w, n);
}

double power_moment(const double* x, const double* w, std::size_t n, int k) {
  return active_backend() == Backend::Avx2 ? avx2::power_moment(x, w, n, k) : scalar::power_moment(x, w, n, k);
}

void geometric_product(int m, const float* a, const float* b, float* out) {
  if (active_backend() == Backend::Avx2) {
    avx2::geometric_product(m, a, b, out);
  } else {
    scalar::geometric_product(m, a, b, out);
  }
}

}  // namespace fsq::simd
