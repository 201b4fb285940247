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

#include "fingroup/kernels.hpp"

#include <cmath>

namespace fingroup::kernels {

namespace {

void exp_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::exp(x[i]);
    }
}

void odd_poly_scalar(const double* coeffs, std::size_t n_coeffs, const double* h,
                     double* g, std::size_t n) {
    if (n_coeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) g[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = h[i];
        const double u = hi * hi;
        double acc = coeffs[n_coeffs - 1];
        for (std::size_t k = n_coeffs - 1; k-- > 0;) {
            acc = acc * u + coeffs[k];
        }
        g[i] = hi * acc;
    }
}

void odd_poly_deriv_scalar(const double* coeffs, std::size_t n_coeffs, const double* h,
                           double* dg, std::size_t n) {
    if (n_coeffs == 0) {
        for (std::size_t i = 0; i < n; ++i) dg[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double u = h[i] * h[i];
        double acc = double(2 * (n_coeffs - 1) + 1) * coeffs[n_coeffs - 1];
        for (std::size_t k = n_coeffs - 1; k-- > 0;) {
            acc = acc * u + double(2 * k + 1) * coeffs[k];
        }
        dg[i] = acc;
    }
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::fabs(x[i]);
        if (std::isnan(v)) return v;
        if (v > m) m = v;
    }
    return m;
}

} // namespace

const Backend& scalar_backend() {
    static constexpr Backend backend{
        "scalar", exp_scalar, odd_poly_scalar, odd_poly_deriv_scalar, max_abs_scalar};
    return backend;
}

} // namespace fingroup::kernels
