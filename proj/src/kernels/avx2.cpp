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

// AVX2+FMA variants of the batch kernels. Compiled with -mavx2 -mfma;
// only reached through the runtime dispatcher, never called on CPUs
// without AVX2. Processes 4 doubles per iteration; the final partial
// block goes through a zero-padded 4-lane buffer so there is a single
// code path.

#include "fingroup/kernels.hpp"

#include <cstring>
#include <immintrin.h>
#include <limits>

namespace fingroup::kernels {

namespace {

// exp via Cephes-style range reduction: x = n*ln2 + r with |r| <= ln2/2,
// exp(r) = 1 + 2r*P(r^2)/(Q(r^2) - r*P(r^2)), then scale by 2^n through
// the exponent bits. Inputs are clamped to [-708, 709] so 2^n and the
// result stay normal; the library never asks beyond |x| <= 700.
const double kExpHi = 709.0;
const double kExpLo = -708.0;
const double kLog2E = 1.4426950408889634073599;
const double kC1 = 6.93145751953125e-1; // ln2 split, high part
const double kC2 = 1.42860682030941723212e-6;
const double kP0 = 1.26177193074810590878e-4;
const double kP1 = 3.02994407707441961300e-2;
const double kP2 = 9.99999999999999999910e-1;
const double kQ0 = 3.00198505138664455042e-6;
const double kQ1 = 2.52448340349684104192e-3;
const double kQ2 = 2.27265548208155028766e-1;
const double kQ3 = 2.00000000000000000005e0;

inline __m256d exp4(__m256d x) {
    x = _mm256_min_pd(x, _mm256_set1_pd(kExpHi));
    x = _mm256_max_pd(x, _mm256_set1_pd(kExpLo));

    // n = round(x * log2(e)), r = x - n*ln2 (split multiplication)
    const __m128i ni = _mm256_cvtpd_epi32(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)));
    const __m256d pn = _mm256_cvtepi32_pd(ni);
    __m256d r = _mm256_fnmadd_pd(pn, _mm256_set1_pd(kC1), x);
    r = _mm256_fnmadd_pd(pn, _mm256_set1_pd(kC2), r);

    const __m256d rr = _mm256_mul_pd(r, r);
    __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(kP0), rr, _mm256_set1_pd(kP1));
    p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(kP2));
    p = _mm256_mul_pd(p, r);
    __m256d q = _mm256_fmadd_pd(_mm256_set1_pd(kQ0), rr, _mm256_set1_pd(kQ1));
    q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(kQ2));
    q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(kQ3));
    const __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    const __m256d y = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // y * 2^n via the biased exponent field
    const __m256i n64 = _mm256_cvtepi32_epi64(ni);
    const __m256i pow2 =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_mul_pd(y, _mm256_castsi256_pd(pow2));
}

void exp_avx2(const double* x, double* y, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
    }
    if (n4 < n) {
        double tmp[4] = {0.0, 0.0, 0.0, 0.0};
        std::memcpy(tmp, x + n4, (n - n4) * sizeof(double));
        _mm256_storeu_pd(tmp, exp4(_mm256_loadu_pd(tmp)));
        std::memcpy(y + n4, tmp, (n - n4) * sizeof(double));
    }
}

inline __m256d odd_poly4(const double* coeffs, std::size_t n_coeffs, __m256d h) {
    const __m256d u = _mm256_mul_pd(h, h);
    __m256d acc = _mm256_set1_pd(coeffs[n_coeffs - 1]);
    for (std::size_t k = n_coeffs - 1; k-- > 0;) {
        acc = _mm256_add_pd(_mm256_mul_pd(acc, u), _mm256_set1_pd(coeffs[k]));
    }
    return _mm256_mul_pd(h, acc);
}

void odd_poly_avx2(const double* coeffs, std::size_t n_coeffs, const double* h,
                   double* g, std::size_t n) {
    if (n_coeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) g[i] = 0.0;
        return;
    }
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(g + i, odd_poly4(coeffs, n_coeffs, _mm256_loadu_pd(h + i)));
    }
    if (n4 < n) {
        double tmp[4] = {0.0, 0.0, 0.0, 0.0};
        std::memcpy(tmp, h + n4, (n - n4) * sizeof(double));
        _mm256_storeu_pd(tmp, odd_poly4(coeffs, n_coeffs, _mm256_loadu_pd(tmp)));
        std::memcpy(g + n4, tmp, (n - n4) * sizeof(double));
    }
}

inline __m256d odd_poly_deriv4(const double* coeffs, std::size_t n_coeffs, __m256d h) {
    const __m256d u = _mm256_mul_pd(h, h);
    __m256d acc = _mm256_set1_pd(double(2 * (n_coeffs - 1) + 1) * coeffs[n_coeffs - 1]);
    for (std::size_t k = n_coeffs - 1; k-- > 0;) {
        acc = _mm256_add_pd(_mm256_mul_pd(acc, u),
                            _mm256_set1_pd(double(2 * k + 1) * coeffs[k]));
    }
    return acc;
}

void odd_poly_deriv_avx2(const double* coeffs, std::size_t n_coeffs, const double* h,
                         double* dg, std::size_t n) {
    if (n_coeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) dg[i] = 0.0;
        return;
    }
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(dg + i, odd_poly_deriv4(coeffs, n_coeffs, _mm256_loadu_pd(h + i)));
    }
    if (n4 < n) {
        double tmp[4] = {0.0, 0.0, 0.0, 0.0};
        std::memcpy(tmp, h + n4, (n - n4) * sizeof(double));
        _mm256_storeu_pd(tmp, odd_poly_deriv4(coeffs, n_coeffs, _mm256_loadu_pd(tmp)));
        std::memcpy(dg + n4, tmp, (n - n4) * sizeof(double));
    }
}

double max_abs_avx2(const double* x, std::size_t n) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d m = _mm256_setzero_pd();
    __m256d nan_seen = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(v, v, _CMP_UNORD_Q));
        m = _mm256_max_pd(m, _mm256_and_pd(v, abs_mask));
    }
    double tail[4];
    _mm256_storeu_pd(tail, m);
    double result = tail[0];
    for (int i = 1; i < 4; ++i) result = tail[i] > result ? tail[i] : result;
    if (_mm256_movemask_pd(nan_seen) != 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double v = x[i] < 0.0 ? -x[i] : x[i];
        if (v != v) return v;
        if (v > result) result = v;
    }
    return result;
}

} // namespace

const Backend* avx2_backend() {
    static constexpr Backend backend{
        "avx2", exp_avx2, odd_poly_avx2, odd_poly_deriv_avx2, max_abs_avx2};
    return &backend;
}

} // namespace fingroup::kernels
