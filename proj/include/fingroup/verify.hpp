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
 * Numerical verification of the algebraic laws.
 *
 * Every law the library's structures satisfy is registered under a
 * stable id and checked over seeded random samples; a report records
 * the worst residual seen against the law's tolerance. Identical
 * (law id, factor, config) inputs produce identical reports; law
 * evaluation deliberately runs through the scalar operations so
 * reports do not depend on which SIMD backend the host selects.
 *
 * Registered laws:
 *
 *   T1-assoc                product associativity
 *   T1-neutral              o = (0,0,1) is neutral
 *   T1-inverse              e * e^-1 = o for nonzero capitals
 *   T1-components           strict credits closed under the product,
 *                           strict debts under the anti-product
 *   T1-isomorphism          opposite intertwines product and anti-product
 *   T2-anti                 anti-product laws (assoc, neutral -o, inverse)
 *   T3-oneparam             mu_o(t+t') = mu_o(t) mu_o(t')
 *   T4-translation-group    centered product group laws at random centers
 *   T5-translation-identity centered product = translate of the product
 *   T6-centered-neutral     e0 is neutral for the centered product
 *   T6b-double-translation  mu_o(t-t0) e0 = mu_{e0}(t) pointwise
 *   T8-homomorphism         mu_{e0}(t +_{t0} t') = [mu(t)|mu(t')] centered
 *   T9-tangent              tangent at the anchor is (1,1,c0*delta_f(h0)),
 *                           and matches central differences
 *   D1-factor-axioms        the factor axioms on the validation grid
 *   P1-partials-fd          product/inverse partials match central differences
 */

#ifndef FINGROUP_VERIFY_HPP
#define FINGROUP_VERIFY_HPP

#include "fingroup/capfactor.hpp"
#include "fingroup/evolution.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fingroup::verify {

struct LawConfig {
    long samples = 200;
    std::uint64_t seed = 12345;
    double atol = 1e-12;
    double rtol = 1e-9;
    double time_min = -20.0;      // curve-law parameter range
    double time_max = 20.0;
    double component_range = 10.0; // |t|, |h| of sampled events
    double capital_range = 100.0;  // |c| of sampled events
    double capital_min = 1e-3;     // keeps 1/c well conditioned
    double fd_tolerance = 1e-6;    // derivative-vs-difference laws
    double tol_recip = 1e-12;      // factor-axiom law
    long grid_points = 101;        // pointwise curve grid

    /// atol + rtol, the tolerance of the algebraic laws under the
    /// max(1,|expected|)-normalized residual.
    double law_tolerance() const { return atol + rtol; }
};

/// Pass/fail record of one numerically checked law.
struct AxiomReport {
    std::string law_id;
    long samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::uint64_t seed = 0;
};

/// Registered ids, in run order.
std::vector<std::string_view> law_ids();

/// Run one law. Unknown ids throw UnknownLawError listing the registry.
AxiomReport run_law(std::string_view law_id, const CapFactor& factor,
                    const LawConfig& config = {});

/// Run every registered law; failures are reported, not thrown.
std::vector<AxiomReport> run_all(const CapFactor& factor, const LawConfig& config = {});

bool all_passed(std::span<const AxiomReport> reports);

/// JSON array of report objects.
std::string reports_to_json(std::span<const AxiomReport> reports);

/// Human-readable table, one line per law.
void print_report_table(std::ostream& out, std::span<const AxiomReport> reports);

/// |got - expected| / max(1, |expected|): absolute near zero, relative
/// for large magnitudes. NaN differences grade as infinite.
double residual(double got, double expected);

/// Worst homomorphism residual of a specific curve against a specific
/// center: max over seeded pairs (t, t') in [time_min, time_max] of the
/// residual of [curve(t)|curve(t')]_(f,center) against curve(t + t' - anchor).
/// With center == curve.base() this is the T8 law for one curve; with a
/// perturbed curve it quantifies how visibly the perturbation breaks
/// the law.
double curve_homomorphism_residual(const EvolutionCurve& curve, const Event& center,
                                   const LawConfig& config = {});

} // namespace fingroup::verify

#endif
