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

#include "fingroup/algebra.hpp"

#include "fingroup/errors.hpp"
#include "fingroup/format.hpp"

namespace fingroup {

namespace {

// Capital of the product, grouped symmetrically so swapping the
// arguments gives the bitwise-identical result.
inline double product_capital(const CapFactor& f, double h, double c, double h2,
                              double c2) {
    return (c * f.eval(-h)) * (c2 * f.eval(-h2)) * f.eval(h + h2);
}

} // namespace

Event f_product(const CapFactor& f, const Event& a, const Event& b) {
    return {a.t + b.t, a.h + b.h, product_capital(f, a.h, a.c, b.h, b.c)};
}

State f_product(const CapFactor& f, const State& a, const State& b) {
    return {a.h + b.h, product_capital(f, a.h, a.c, b.h, b.c)};
}

Event f_anti_product(const CapFactor& f, const Event& a, const Event& b) {
    Event p = f_product(f, a, b);
    p.c = -p.c;
    return p;
}

State f_anti_product(const CapFactor& f, const State& a, const State& b) {
    State p = f_product(f, a, b);
    p.c = -p.c;
    return p;
}

Event f_inverse(const Event& e) {
    if (e.c == 0.0) {
        throw NotInvertibleError("zero event is not invertible: " + format_event(e));
    }
    return {-e.t, -e.h, 1.0 / e.c};
}

Event centered_product(const CapFactor& f, const Event& e0, const Event& a,
                       const Event& b) {
    if (e0.c == 0.0) {
        throw NotInvertibleError("center is not invertible: " + format_event(e0));
    }
    const double h = (a.h + b.h) - e0.h;
    const double capital = (a.c / f.eval(a.h)) * (b.c / f.eval(b.h)) *
                           ((1.0 / e0.c) / f.eval(-e0.h)) * f.eval(h);
    return {(a.t + b.t) - e0.t, h, capital};
}

Event translate(const CapFactor& f, const Event& e0, const Event& x) {
    return f_product(f, x, f_inverse(e0));
}

Event translated_inverse(const CapFactor& f, const Event& e0, const Event& e) {
    if (e0.c == 0.0) {
        throw NotInvertibleError("center is not invertible: " + format_event(e0));
    }
    return f_product(f, f_inverse(e), f_product(f, e0, e0));
}

Event n_fold_product(const CapFactor& f, std::span<const Event> events) {
    if (events.empty()) {
        throw Error("n_fold_product: empty event list");
    }
    double sum_t = 0.0;
    double sum_h = 0.0;
    double discounted = 1.0;
    for (const Event& e : events) {
        sum_t += e.t;
        sum_h += e.h;
        discounted *= e.c / f.eval(e.h);
    }
    return {sum_t, sum_h, discounted * f.eval(sum_h)};
}

ProductPartials product_partials(const CapFactor& f, const Event& a, const Event& b) {
    const double fm = f.eval(-a.h);
    const double fm2 = f.eval(-b.h);
    const double fw = f.eval(a.h + b.h);
    const double dfm = f.derivative(-a.h);
    const double dfm2 = f.derivative(-b.h);
    const double dfw = f.derivative(a.h + b.h);

    ProductPartials p;
    p.dt = {1.0, 0.0, 0.0};
    p.dt2 = {1.0, 0.0, 0.0};
    // chain rule: f(-h) contributes -f'(-h), f(h+h') contributes +f'(h+h')
    p.dh = {0.0, 1.0, b.c * fm2 * (-a.c * dfm * fw + a.c * fm * dfw)};
    p.dh2 = {0.0, 1.0, a.c * fm * (-b.c * dfm2 * fw + b.c * fm2 * dfw)};
    p.dc = {0.0, 0.0, fm * b.c * fm2 * fw};
    p.dc2 = {0.0, 0.0, a.c * fm * fm2 * fw};
    return p;
}

InversePartials inverse_partials(const Event& e) {
    if (e.c == 0.0) {
        throw NotInvertibleError("zero event is not invertible: " + format_event(e));
    }
    return {{-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0 / (e.c * e.c)}};
}

} // namespace fingroup
