#pragma once

// Dense numeric kernels with a scalar reference implementation and an AVX2/FMA
// variant selected at runtime. Setting FSQ_FORCE_SCALAR in the environment pins
// the scalar path.

#include <cstddef>

namespace fsq::simd {

enum class Backend { Scalar, Avx2 };

const char* to_string(Backend b);

/// True when the CPU reports AVX2 and FMA.
bool avx2_available();

/// The backend used by the dispatching entry points below.
Backend active_backend();

/// Overrides the runtime choice (tests use this to compare both paths).
/// Requesting Avx2 on a machine without it throws Unsupported.
void set_backend(Backend b);
void reset_backend();

/// sum_i v[i] w[i].
double weighted_sum(const double* v, const double* w, std::size_t n);

/// sum_i w[i] x[i]^k for k >= 0.
double power_moment(const double* x, const double* w, std::size_t n, int k);

/// Dense geometric product in Cl_{0,m}: a, b, out hold 2^m coefficients indexed by
/// blade bitmask. out must not alias a or b.
void geometric_product(int m, const float* a, const float* b, float* out);

namespace scalar {
double weighted_sum(const double* v, const double* w, std::size_t n);
double power_moment(const double* x, const double* w, std::size_t n, int k);
void geometric_product(int m, const float* a, const float* b, float* out);
}  // namespace scalar

namespace avx2 {
double weighted_sum(const double* v, const double* w, std::size_t n);
double power_moment(const double* x, const double* w, std::size_t n, int k);
void geometric_product(int m, const float* a, const float* b, float* out);
}  // namespace avx2

/// sign of e_A e_B = sign * e_{A xor B}, tabulated as table[a * 2^m + (a xor b)].
const float* product_sign_table(int m);

}  // namespace fsq::simd
