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
 * Evolution curves and the exponential map.
 *
 * The evolution of a base event e0 = (t0, h0, c0) under a factor f is
 * the curve
 *
 *   mu(t) = (t, h0 + t - t0, c0 * f(h0 + t - t0)/f(h0))
 *
 * which passes through e0 at t0 and is a homomorphism from the real
 * line with addition translated to t0 into the event group with the
 * product centered at e0. Its tangent at t0 is (1, 1, c0*delta_f(h0)),
 * and it is the unique one-parameter curve of this shape with that
 * tangent: it is the exponential map of the centered group.
 */

#ifndef FINGROUP_EVOLUTION_HPP
#define FINGROUP_EVOLUTION_HPP

#include "fingroup/capfactor.hpp"
#include "fingroup/events.hpp"

#include <iosfwd>
#include <span>

namespace fingroup {

/// A tangent vector: a base point plus component rates, with the
/// source of the capital rate (analytic derivative or central
/// difference) recorded.
struct TangentVector {
    Event at;
    Direction direction;
    DerivativeMode derivative_source = DerivativeMode::analytic;
};

/// The translated real line (R, +_{t0}): a +_{t0} b = a + b - t0,
/// neutral t0, inverse 2*t0 - a.
struct TranslatedTimeLine {
    double t0 = 0.0;

    double add(double a, double b) const { return a + b - t0; }
    double neg(double a) const { return 2.0 * t0 - a; }
    double neutral() const { return t0; }
};

/// The evolution curve of a base event. The curve parameter is
/// anchored at `anchor` (the base event's reference time unless built
/// through exp_map with an explicit t0): evaluate(anchor) == base
/// bitwise.
class EvolutionCurve {
public:
    EvolutionCurve(Event base, CapFactor factor);
    EvolutionCurve(Event base, CapFactor factor, double anchor);

    const Event& base() const { return base_; }
    const CapFactor& factor() const { return factor_; }
    double anchor() const { return anchor_; }

    Event evaluate(double t) const;
    Event operator()(double t) const { return evaluate(t); }

    /// Third component of evaluate(t): M(t) = c0 * f(h0 + t - t0)/f(h0).
    double capital(double t) const;

    /// Curve velocity (1, 1, c0 * f'(h0 + t - t0)/f(h0)).
    TangentVector tangent(double t) const;

    /// Batch evaluation over a time grid through the kernel backend.
    /// h_out/c_out sizes must match ts. Rows where ts[i] == anchor
    /// reproduce the base event bitwise on every backend.
    void sample(std::span<const double> ts, std::span<double> h_out,
                std::span<double> c_out) const;

private:
    Event base_;
    CapFactor factor_;
    double anchor_;
    double f_h0_; // f(h0), cached
};

/// mu_{e0}(t) evaluated through the unit-event curve: mu_o(t - t0) * e0.
/// Agrees with EvolutionCurve(e0, f).evaluate(t) within tolerance.
Event double_translate_unit(const CapFactor& f, const Event& e0, double t);

/// The exponential map at (t0, e0): the evolution curve through e0
/// anchored at t0 together with its defining tangent vector
/// (e0, (1, 1, c0*delta_f(h0))). Throws NotInvertibleError when e0 has
/// zero capital (only invertible base events generate one-parameter
/// groups).
struct ExpMap {
    EvolutionCurve curve;
    TangentVector tangent;
};
ExpMap exp_map(const CapFactor& f, double t0, const Event& e0);

/// Write curve samples as CSV: header "t,h,c", one shortest-round-trip
/// row per grid point, LF line endings.
void write_curve_csv(std::ostream& out, const EvolutionCurve& curve,
                     std::span<const double> ts);

} // namespace fingroup

#endif
