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
 * Capitalization factors.
 *
 * A capitalization factor f maps a time displacement h to the growth
 * multiplier of a unit capital over h, and must satisfy:
 *
 *   1. f(h) > 0 for every h,
 *   2. f(0) = 1,
 *   3. f(-h) = 1/f(h),
 *   4. f is C1.
 *
 * Positivity with axiom 3 forces f = exp(g) with g odd, so every
 * built-in kind is represented through its growth exponent g:
 *
 *   exponential        g(h) = delta*h            (constant force of interest)
 *   odd_poly_exp       g(h) = sum a_k h^(2k+1)
 *   tabulated_odd_exp  g piecewise linear through user samples on h > 0,
 *                      extended oddly; C1 only between knots (flagged in
 *                      validation reports)
 *
 * The force of interest is delta_f(h) = f'(h)/f(h) = g'(h).
 */

#ifndef FINGROUP_CAPFACTOR_HPP
#define FINGROUP_CAPFACTOR_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fingroup {

enum class FactorKind { exponential, odd_poly_exp, tabulated_odd_exp };

enum class DerivativeMode { analytic, finite_difference };

/// Step used by every central difference in the library: 1e-6*max(1,|h|).
double finite_difference_step(double h);

class CapFactor {
public:
    /// Growth exponents beyond this magnitude are range errors (double
    /// precision exp headroom).
    static constexpr double max_exponent = 700.0;

    static CapFactor exponential(double delta,
                                 DerivativeMode mode = DerivativeMode::analytic);
    static CapFactor odd_poly_exp(std::vector<double> coeffs,
                                  DerivativeMode mode = DerivativeMode::analytic);
    /// samples are (h, g(h)) pairs with h > 0 strictly increasing; g is
    /// interpolated linearly through (0,0) and the samples, the slope of
    /// the last segment extends beyond the last knot.
    static CapFactor tabulated_odd_exp(std::vector<std::array<double, 2>> samples,
                                       DerivativeMode mode = DerivativeMode::analytic);

    FactorKind kind() const { return kind_; }
    DerivativeMode derivative_mode() const { return mode_; }

    /// True for kinds whose derivative is only piecewise continuous
    /// (the tabulated kind).
    bool piecewise() const { return kind_ == FactorKind::tabulated_odd_exp; }

    /// Interpolation knots on h > 0 (empty for analytic kinds).
    std::span<const double> knots() const;

    /// g(h) = ln f(h). Never throws; overflow checks happen at eval.
    double log_factor(double h) const;
    /// g'(h); for the tabulated kind the slope of the containing segment.
    double log_factor_derivative(double h) const;

    /// f(h). Throws RangeError when |g(h)| exceeds max_exponent.
    double eval(double h) const;
    double operator()(double h) const { return eval(h); }

    /// f'(h): analytic g'(h)*f(h), or a central difference of eval when
    /// the factor was built with DerivativeMode::finite_difference.
    double derivative(double h) const;

    /// delta_f(h) = f'(h)/f(h).
    double force_of_interest(double h) const;

    /// Batch f over a grid through the active kernel backend.
    /// out may alias h. Throws RangeError naming the first offending h.
    void eval_batch(std::span<const double> h, std::span<double> out) const;
    /// Batch f' (analytic mode uses the derivative kernels, finite
    /// difference mode loops over derivative()).
    void derivative_batch(std::span<const double> h, std::span<double> out) const;

    /// Short description for reports, e.g. "exponential(delta=0.05)".
    std::string describe() const;

private:
    CapFactor() = default;

    void log_factor_batch(std::span<const double> h, std::span<double> g) const;
    double tabulated_log(double h) const;
    double tabulated_slope(double h) const;

    FactorKind kind_ = FactorKind::exponential;
    DerivativeMode mode_ = DerivativeMode::analytic;
    std::vector<double> coeffs_;   // odd polynomial coefficients (analytic kinds)
    std::vector<double> knots_h_;  // tabulated: 0, h1, ..., hn
    std::vector<double> knots_g_;  // tabulated: 0, g1, ..., gn
    std::vector<double> slopes_;   // tabulated: per-segment slope
};

/// Parse a factor-spec JSON document:
///   {"kind":"exponential","delta":0.05}
///   {"kind":"odd_poly_exp","coeffs":[0.05,0.001]}
///   {"kind":"tabulated_odd_exp","samples":[[h,g],...]}
/// Unknown kinds or keys, malformed values, and bad sample tables all
/// throw SpecError.
CapFactor parse_factor_spec(const std::string& json_text);
CapFactor load_factor_spec(const std::string& path);

/// An unvalidated candidate factor: anything evaluable can be graded
/// against the axioms, including candidates (like simple interest,
/// f(h) = 1 + r*h) that no constructible CapFactor can represent.
struct FactorCandidate {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> fprime; // empty: use central differences
    bool piecewise_c1 = false;
};

/// One axiom's outcome inside a validation report.
struct AxiomResidual {
    std::string axiom;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Outcome of checking the factor axioms on a grid.
struct ValidationReport {
    std::string factor;
    std::size_t grid_points = 0;
    double tol_recip = 0.0;
    std::vector<AxiomResidual> axioms; // unit-at-zero, positivity, reciprocity, derivative
    bool piecewise_c1 = false;         // C1 holds only between knots
    bool passed = false;

    double max_residual() const;
};

/// The default validation grid, +-{0.25, 0.5, 1, 2, 5, 10, 25}.
std::span<const double> default_validation_grid();

/// Check the axioms on the grid (symmetrized by adding -h for every h):
/// f(0) = 1, positivity, |f(h)f(-h) - 1| <= tol_recip, finite derivative.
/// A candidate that throws or violates an axiom yields a FAIL report,
/// never an exception.
ValidationReport validate_factor(const CapFactor& factor,
                                 std::span<const double> grid = default_validation_grid(),
                                 double tol_recip = 1e-12);
ValidationReport validate_candidate(const FactorCandidate& candidate,
                                    std::span<const double> grid = default_validation_grid(),
                                    double tol_recip = 1e-12);

/// JSON object with the factor, per-axiom residuals and the overall result.
std::string validation_to_json(const ValidationReport& report);

/// Per-axiom table plus the overall verdict, as printed by the CLI.
void print_validation_report(std::ostream& out, const ValidationReport& report);

} // namespace fingroup

#endif
