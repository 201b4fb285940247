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

#include "fingroup/evolution.hpp"

#include "fingroup/algebra.hpp"
#include "fingroup/errors.hpp"
#include "fingroup/format.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace fingroup {

EvolutionCurve::EvolutionCurve(Event base, CapFactor factor)
    : EvolutionCurve(base, std::move(factor), base.t) {}

EvolutionCurve::EvolutionCurve(Event base, CapFactor factor, double anchor)
    : base_(base), factor_(std::move(factor)), anchor_(anchor),
      f_h0_(factor_.eval(base.h)) {}

Event EvolutionCurve::evaluate(double t) const {
    const double dt = t - anchor_;
    // capital as c0 * (f(h0+dt)/f(h0)): the ratio is exactly 1 at the
    // anchor, so the curve reproduces its base event bitwise there
    return {base_.t + dt, base_.h + dt, base_.c * (factor_.eval(base_.h + dt) / f_h0_)};
}

double EvolutionCurve::capital(double t) const { return evaluate(t).c; }

TangentVector EvolutionCurve::tangent(double t) const {
    const double dt = t - anchor_;
    const double rate = base_.c * (factor_.derivative(base_.h + dt) / f_h0_);
    return {evaluate(t), {1.0, 1.0, rate}, factor_.derivative_mode()};
}

void EvolutionCurve::sample(std::span<const double> ts, std::span<double> h_out,
                            std::span<double> c_out) const {
    if (h_out.size() != ts.size() || c_out.size() != ts.size()) {
        throw Error("sample: output size mismatch");
    }
    const std::size_t n = ts.size();
    // evaluate f over the grid plus h0 itself, all through one backend,
    // so the ratio at the anchor is exactly 1 whichever backend runs
    std::vector<double> hs(n + 1);
    for (std::size_t i = 0; i < n; ++i) hs[i] = base_.h + (ts[i] - anchor_);
    hs[n] = base_.h;
    std::vector<double> fv(n + 1);
    factor_.eval_batch(hs, fv);
    const double f_h0 = fv[n];
    for (std::size_t i = 0; i < n; ++i) {
        h_out[i] = hs[i];
        c_out[i] = base_.c * (fv[i] / f_h0);
    }
}

Event double_translate_unit(const CapFactor& f, const Event& e0, double t) {
    const double s = t - e0.t;
    const Event unit_at{s, s, f.eval(s)};
    return f_product(f, unit_at, e0);
}

ExpMap exp_map(const CapFactor& f, double t0, const Event& e0) {
    if (e0.c == 0.0) {
        throw NotInvertibleError("exponential map needs an invertible base event, got " +
                                 format_event(e0));
    }
    EvolutionCurve curve(e0, f, t0);
    TangentVector v{e0, {1.0, 1.0, e0.c * f.force_of_interest(e0.h)},
                    f.derivative_mode()};
    return {std::move(curve), v};
}

void write_curve_csv(std::ostream& out, const EvolutionCurve& curve,
                     std::span<const double> ts) {
    std::vector<double> hs(ts.size());
    std::vector<double> cs(ts.size());
    curve.sample(ts, hs, cs);
    out << "t,h,c\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t = curve.base().t + (ts[i] - curve.anchor());
        out << format_double(t) << ',' << format_double(hs[i]) << ','
            << format_double(cs[i]) << '\n';
    }
}

} // namespace fingroup
