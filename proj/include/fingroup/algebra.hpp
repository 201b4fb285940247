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
 * The event algebra induced by a capitalization factor.
 *
 * The f-product discounts both capitals to their origins and
 * recapitalizes over the summed displacement:
 *
 *   e e' = (t+t', h+h', c f(-h) c' f(-h') f(h+h'))
 *
 * It is commutative and associative with neutral o = (0,0,1); events
 * with nonzero capital are invertible with inverse (-t,-h,1/c),
 * independent of f. The anti-product negates the capital and makes the
 * debt half-space a group with neutral -o = (0,0,-1). Centering the
 * product at an invertible e0 (e e' e0^-1) moves the neutral to e0.
 *
 * Historical naming note: these binary operations are traditionally
 * called "Lie products" in the financial-event setting; they are group
 * multiplications, not Lie brackets.
 */

#ifndef FINGROUP_ALGEBRA_HPP
#define FINGROUP_ALGEBRA_HPP

#include "fingroup/capfactor.hpp"
#include "fingroup/events.hpp"

#include <span>

namespace fingroup {

/// e e' under f. Bitwise symmetric in its event arguments.
Event f_product(const CapFactor& f, const Event& a, const Event& b);
State f_product(const CapFactor& f, const State& a, const State& b);

/// The anti-product: the f-product with negated capital.
Event f_anti_product(const CapFactor& f, const Event& a, const Event& b);
State f_anti_product(const CapFactor& f, const State& a, const State& b);

/// (-t, -h, 1/c); independent of the factor. Throws NotInvertibleError
/// on zero events.
Event f_inverse(const Event& e);

/// The product centered at e0:
///   [e|e']_(f,e0) = (t+t'-t0, h+h'-h0,
///                    (c/f(h)) (c'/f(h')) (1/(c0 f(-h0))) f(h+h'-h0))
/// Neutral element e0; equals translate(f, e0, f_product(f, e, e')).
/// Throws NotInvertibleError when e0 has zero capital.
Event centered_product(const CapFactor& f, const Event& e0, const Event& a,
                       const Event& b);

/// x e0^-1 under f.
Event translate(const CapFactor& f, const Event& e0, const Event& x);

/// The inverse of e in the product centered at e0: e^-1 e0^2.
Event translated_inverse(const CapFactor& f, const Event& e0, const Event& e);

/// Product of a non-empty list via the closed form
/// (sum t_i, sum h_i, prod(c_i/f(h_i)) * f(sum h_i)).
Event n_fold_product(const CapFactor& f, std::span<const Event> events);

/// Partial derivatives of the f-product with respect to its six scalar
/// arguments (t, h, c, t', h', c'), each a component-rate triple.
struct ProductPartials {
    Direction dt, dh, dc;    // first event's components
    Direction dt2, dh2, dc2; // second event's components
};
ProductPartials product_partials(const CapFactor& f, const Event& a, const Event& b);

/// Partial derivatives of the inverse map: (-1,0,0), (0,-1,0), (0,0,-1/c^2).
struct InversePartials {
    Direction dt, dh, dc;
};
InversePartials inverse_partials(const Event& e);

} // namespace fingroup

#endif
