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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingroup/capfactor.hpp"
#include "fingroup/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fingroup;

namespace {

double rel_err(double got, double want) {
    if (got == want) return 0.0;
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

std::mt19937_64 rng(11);
double uniform(double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
}

// central difference of f, the independent oracle for derivatives
double central_difference(const CapFactor& f, double h) {
    const double s = finite_difference_step(h);
    return (f.eval(h + s) - f.eval(h - s)) / (2.0 * s);
}

} // namespace

TEST_CASE("exponential factor values") {
    const CapFactor f = CapFactor::exponential(0.05);
    CHECK(f.eval(0.0) == 1.0); // axiom: unit at zero, exact
    CHECK(f.eval(2.0) == doctest::Approx(1.1051709180756477).epsilon(1e-15));
    CHECK(f.eval(-2.0) == doctest::Approx(1.0 / 1.1051709180756477).epsilon(1e-15));
}

TEST_CASE("odd polynomial factor values") {
    const CapFactor f = CapFactor::odd_poly_exp({0.05, 0.001});
    // g(-2) = -(0.05*2 + 0.001*8) = -0.108
    CHECK(f.eval(-2.0) == doctest::Approx(0.8976275964304349).epsilon(1e-15));
    CHECK(f.eval(0.0) == 1.0);
}

TEST_CASE("derivatives") {
    const CapFactor exp05 = CapFactor::exponential(0.05);
    CHECK(exp05.derivative(0.0) == doctest::Approx(0.05).epsilon(1e-15));

    const CapFactor flat = CapFactor::exponential(0.0);
    CHECK(flat.derivative(3.0) == 0.0);
    CHECK(flat.eval(17.0) == 1.0);

    // f' = g' e^g at h=1: (0.05 + 3*0.001) e^0.051
    const CapFactor poly = CapFactor::odd_poly_exp({0.05, 0.001});
    CHECK(poly.derivative(1.0) == doctest::Approx(0.055773113344009806).epsilon(1e-15));
    CHECK(poly.derivative(1.0) ==
          doctest::Approx(central_difference(poly, 1.0)).epsilon(1e-9));
}

TEST_CASE("derivative consistency against central differences on |h| <= 50") {
    const std::vector<CapFactor> factors = {
        CapFactor::exponential(0.05),
        CapFactor::exponential(0.2),
        CapFactor::odd_poly_exp({0.05, 0.001}),
    };
    for (const CapFactor& f : factors) {
        for (int i = 0; i < 200; ++i) {
            const double h = uniform(-50.0, 50.0);
            const double analytic = f.derivative(h);
            const double fd = central_difference(f, h);
            CHECK(std::fabs(analytic - fd) <= 1e-6 * std::max(1.0, std::fabs(analytic)));
        }
    }
}

TEST_CASE("finite difference mode") {
    const CapFactor f =
        CapFactor::exponential(0.05, DerivativeMode::finite_difference);
    CHECK(f.derivative(2.0) ==
          doctest::Approx(0.05 * std::exp(0.1)).epsilon(1e-9));
    CHECK(f.force_of_interest(2.0) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(f.derivative_mode() == DerivativeMode::finite_difference);
}

TEST_CASE("force of interest") {
    const CapFactor exp05 = CapFactor::exponential(0.05);
    CHECK(exp05.force_of_interest(7.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(CapFactor::exponential(0.0).force_of_interest(3.0) == 0.0);

    const CapFactor poly = CapFactor::odd_poly_exp({0.05, 0.001});
    CHECK(poly.force_of_interest(2.0) == doctest::Approx(0.062).epsilon(1e-15));

    // identity delta_f * f = f'
    for (int i = 0; i < 100; ++i) {
        const double h = uniform(-20.0, 20.0);
        CHECK(rel_err(poly.force_of_interest(h) * poly.eval(h), poly.derivative(h)) <=
              1e-12);
    }
}

TEST_CASE("reciprocity is near-exact for built-in kinds") {
    const std::vector<CapFactor> factors = {
        CapFactor::exponential(0.2),
        CapFactor::odd_poly_exp({0.05, 0.001}),
        CapFactor::tabulated_odd_exp({{1.0, 0.05}, {2.0, 0.09}, {5.0, 0.2}}),
    };
    for (const CapFactor& f : factors) {
        for (int i = 0; i < 200; ++i) {
            const double h = uniform(-25.0, 25.0);
            CHECK(std::fabs(f.eval(h) * f.eval(-h) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("positivity on finite inputs") {
    const CapFactor f = CapFactor::odd_poly_exp({0.05, 0.001});
    for (int i = 0; i < 200; ++i) {
        CHECK(f.eval(uniform(-80.0, 80.0)) > 0.0);
    }
}

TEST_CASE("range error beyond the exponent budget") {
    const CapFactor f = CapFactor::exponential(1.0);
    CHECK_NOTHROW(f.eval(699.0));
    CHECK_THROWS_AS(f.eval(701.0), RangeError);
    CHECK_THROWS_AS(f.eval(-701.0), RangeError);
    // batch path reports the same failure
    const std::vector<double> hs = {0.0, 1.0, 800.0};
    std::vector<double> out(3);
    CHECK_THROWS_AS(f.eval_batch(hs, out), RangeError);
}

TEST_CASE("tabulated factor interpolation") {
    // g linear with slope 0.05 up to h=2, then slope 0.01
    const CapFactor f = CapFactor::tabulated_odd_exp({{2.0, 0.1}, {4.0, 0.12}});
    CHECK(f.eval(0.0) == 1.0);
    CHECK(f.log_factor(1.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(f.log_factor(2.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(f.log_factor(3.0) == doctest::Approx(0.11).epsilon(1e-15));
    CHECK(f.log_factor(-3.0) == doctest::Approx(-0.11).epsilon(1e-15)); // odd extension
    CHECK(f.log_factor(8.0) == doctest::Approx(0.16).epsilon(1e-15));   // extrapolation
    CHECK(f.log_factor_derivative(1.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(f.log_factor_derivative(-1.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(f.log_factor_derivative(3.0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(f.log_factor_derivative(9.0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(f.piecewise());
    CHECK(f.knots().size() == 2);
}

TEST_CASE("batch evaluation agrees with scalar evaluation") {
    const std::vector<CapFactor> factors = {
        CapFactor::exponential(0.05),
        CapFactor::odd_poly_exp({0.05, 0.001}),
        CapFactor::tabulated_odd_exp({{1.0, 0.04}, {3.0, 0.1}}),
    };
    for (const CapFactor& f : factors) {
        std::vector<double> hs(257);
        for (double& h : hs) h = uniform(-30.0, 30.0);
        std::vector<double> fv(hs.size()), dv(hs.size());
        f.eval_batch(hs, fv);
        f.derivative_batch(hs, dv);
        for (std::size_t i = 0; i < hs.size(); ++i) {
            CHECK(rel_err(fv[i], f.eval(hs[i])) <= 1e-13);
            CHECK(rel_err(dv[i], f.derivative(hs[i])) <= 1e-13);
        }
    }
}

TEST_CASE("validate: conforming factors pass") {
    const ValidationReport r = validate_factor(CapFactor::exponential(0.05));
    CHECK(r.passed);
    CHECK(r.max_residual() <= 1e-12);

    // constant factor: zero residuals everywhere
    const ValidationReport flat = validate_factor(CapFactor::exponential(0.0));
    CHECK(flat.passed);
    CHECK(flat.max_residual() == 0.0);

    const ValidationReport tab = validate_factor(
        CapFactor::tabulated_odd_exp({{1.0, 0.05}, {2.0, 0.09}}));
    CHECK(tab.passed);
    CHECK(tab.piecewise_c1);
}

TEST_CASE("validate: simple-interest candidate fails reciprocity") {
    const FactorCandidate simple{
        "simple-interest(0.05)", [](double h) { return 1.0 + 0.05 * h; },
        [](double) { return 0.05; }, false};
    const ValidationReport r = validate_candidate(simple);
    CHECK_FALSE(r.passed);
    bool saw_reciprocity = false;
    for (const auto& axiom : r.axioms) {
        if (axiom.axiom == "reciprocity") {
            saw_reciprocity = true;
            CHECK_FALSE(axiom.passed);
            // f(1) f(-1) = 1.05 * 0.95 = 0.9975
            CHECK(axiom.max_residual >= 0.0025 - 1e-15);
        }
    }
    CHECK(saw_reciprocity);
}

TEST_CASE("validate: overflowing factor yields FAIL, not a crash") {
    // g(25) = 2.5e4 * 25 >> 700 on the default grid
    const ValidationReport r = validate_factor(CapFactor::exponential(2.5e4));
    CHECK_FALSE(r.passed);
}

TEST_CASE("factor-spec JSON parsing") {
    const CapFactor f = parse_factor_spec(R"({"kind":"exponential","delta":0.05})");
    CHECK(f.kind() == FactorKind::exponential);
    CHECK(f.eval(2.0) == doctest::Approx(std::exp(0.1)).epsilon(1e-15));

    const CapFactor p =
        parse_factor_spec(R"({"kind":"odd_poly_exp","coeffs":[0.05,0.001]})");
    CHECK(p.kind() == FactorKind::odd_poly_exp);
    CHECK(p.log_factor(2.0) == doctest::Approx(0.108).epsilon(1e-15));

    const CapFactor t = parse_factor_spec(
        R"({"kind":"tabulated_odd_exp","samples":[[1.0,0.05],[2.0,0.09]]})");
    CHECK(t.kind() == FactorKind::tabulated_odd_exp);

    CHECK_THROWS_AS(parse_factor_spec("not json"), SpecError);
    CHECK_THROWS_AS(parse_factor_spec(R"({"kind":"simple_interest","rate":0.05})"),
                    SpecError);
    CHECK_THROWS_AS(parse_factor_spec(R"({"kind":"exponential"})"), SpecError);
    CHECK_THROWS_AS(
        parse_factor_spec(R"({"kind":"exponential","delta":0.05,"extra":1})"),
        SpecError);
    CHECK_THROWS_AS(parse_factor_spec(R"({"kind":"exponential","delta":"x"})"),
                    SpecError);
    CHECK_THROWS_AS(parse_factor_spec(R"({"kind":"odd_poly_exp","coeffs":0.05})"),
                    SpecError);
    // non-increasing sample times
    CHECK_THROWS_AS(parse_factor_spec(
                        R"({"kind":"tabulated_odd_exp","samples":[[2.0,0.1],[1.0,0.2]]})"),
                    SpecError);
    // sample times must be positive
    CHECK_THROWS_AS(parse_factor_spec(
                        R"({"kind":"tabulated_odd_exp","samples":[[-1.0,0.1]]})"),
                    SpecError);
    CHECK_THROWS_AS(parse_factor_spec(R"([1,2,3])"), SpecError);
}

TEST_CASE("validation grid is symmetrized and must be non-empty") {
    const double grid[] = {0.5, 1.0, 2.0, 5.0};
    const ValidationReport r =
        validate_factor(CapFactor::exponential(0.05), grid, 1e-12);
    CHECK(r.passed);
    CHECK(r.grid_points == 9); // +-4 points plus zero

    const std::vector<double> empty;
    CHECK_THROWS_AS(
        validate_factor(CapFactor::exponential(0.05), empty, 1e-12), SpecError);
}
