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
 * Capitalized financial events and states.
 *
 * An event is a plain triple (t, h, c): a reference time t, a
 * capitalization time h (the event has been under capitalization since
 * t − h), and a capital c, the value of the event at t. The pair (h, c)
 * is the state of the event. Any real triple is a valid event; capitals
 * of either sign are allowed.
 */

#ifndef FINGROUP_EVENTS_HPP
#define FINGROUP_EVENTS_HPP

#include <utility>

namespace fingroup {

/// A capitalized financial event (t, h, c).
struct Event {
    double t = 0.0; ///< reference time
    double h = 0.0; ///< capitalization time
    double c = 0.0; ///< capital at t

    friend bool operator==(const Event&, const Event&) = default;
};

/// A capitalized financial state (h, c): an event with its reference
/// time projected away.
struct State {
    double h = 0.0;
    double c = 0.0;

    friend bool operator==(const State&, const State&) = default;
};

/// The unit event o = (0, 0, 1), neutral for the product.
inline constexpr Event unit_event{0.0, 0.0, 1.0};

/// A tangent triple to event space: component rates (dt, dh, dc).
struct Direction {
    double dt = 0.0;
    double dh = 0.0;
    double dc = 0.0;

    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Classification of an event by the sign of its capital. Credits and
/// debts overlap exactly on zero events (c == 0), so the result is a
/// set of memberships rather than a single label.
struct Classification {
    bool zero = false;          ///< c == 0
    bool credit = false;        ///< c >= 0
    bool strict_credit = false; ///< c > 0
    bool debt = false;          ///< c <= 0
    bool strict_debt = false;   ///< c < 0

    friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const Event& e) {
    Classification k;
    k.zero = e.c == 0.0;
    k.credit = e.c >= 0.0;
    k.strict_credit = e.c > 0.0;
    k.debt = e.c <= 0.0;
    k.strict_debt = e.c < 0.0;
    return k;
}

inline bool is_zero(const Event& e) { return e.c == 0.0; }
inline bool is_strict_credit(const Event& e) { return e.c > 0.0; }
inline bool is_strict_debt(const Event& e) { return e.c < 0.0; }

/// The opposite of (t, h, c) is (t, h, -c). An involution swapping
/// strict credits and strict debts.
inline Event opposite(const Event& e) { return {e.t, e.h, -e.c}; }
inline State opposite(const State& s) { return {s.h, -s.c}; }

inline State project_state(const Event& e) { return {e.h, e.c}; }
inline std::pair<double, double> project_multitime(const Event& e) { return {e.t, e.h}; }
inline double project_reference_time(const Event& e) { return e.t; }
inline double project_capital(const Event& e) { return e.c; }

/// The time since which the event has been in the market: t - h.
inline double origin_time(const Event& e) { return e.t - e.h; }

} // namespace fingroup

#endif
