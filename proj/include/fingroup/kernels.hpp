/*
 *   Copyright 2026 The fingroup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * Batch kernels over contiguous double arrays.
 *
 * Every capitalization factor in this library is exp(g) with g odd, so
 * the arithmetic inner loop of grid validation and curve sampling is:
 * evaluate an odd polynomial (or its derivative), scan for exponent
 * overflow, exponentiate. Those four primitives are provided as a
 * scalar reference backend and an AVX2 backend selected at runtime.
 * The scalar backend is the semantic reference; the AVX2 variants are
 * equivalence-tested against it.
 */

#ifndef FINGROUP_KERNELS_HPP
#define FINGROUP_KERNELS_HPP

#include <cstddef>

namespace fingroup::kernels {

/// A set of batch kernels. All kernels accept n == 0 and allow the
/// output to alias the input.
struct Backend {
    const char* name;

    /// y[i] = exp(x[i]). Intended domain |x| <= 708 (the library clamps
    /// growth exponents to 700 before calling); the AVX2 variant
    /// saturates at the domain bounds instead of producing inf/0.
    void (*exp)(const double* x, double* y, std::size_t n);

    /// g[i] = sum_k coeffs[k] * h[i]^(2k+1), Horner in h^2.
    /// n_coeffs == 0 yields all zeros.
    void (*odd_poly)(const double* coeffs, std::size_t n_coeffs, const double* h,
                     double* g, std::size_t n);

    /// dg[i] = sum_k (2k+1) * coeffs[k] * h[i]^(2k).
    void (*odd_poly_deriv)(const double* coeffs, std::size_t n_coeffs, const double* h,
                           double* dg, std::size_t n);

    /// max_i |x[i]|; 0 for n == 0; NaN when any element is NaN.
    double (*max_abs)(const double* x, std::size_t n);
};

/// The scalar reference backend (always present).
const Backend& scalar_backend();

/// The AVX2 backend, or nullptr when not compiled in (non-x86 builds).
/// Callers must check avx2_available() before using its kernels.
const Backend* avx2_backend();

/// True when the AVX2 backend is compiled in and this CPU supports
/// AVX2 and FMA.
bool avx2_available();

/// The backend batch work routes through: AVX2 when available, unless
/// the FINGROUP_NO_SIMD environment variable is set to a nonzero value.
/// The choice is made once per process.
const Backend& active_backend();

} // namespace fingroup::kernels

#endif
