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

/// Event literals and number formatting shared by the CLI, the CSV
/// writer and the report printers. Numbers are written in shortest
/// round-trip form, so parsing printed output reproduces the exact
/// double.

#ifndef FINGROUP_FORMAT_HPP
#define FINGROUP_FORMAT_HPP

#include "fingroup/events.hpp"

#include <string>
#include <string_view>

namespace fingroup {

/// Shortest decimal that round-trips to exactly v.
std::string format_double(double v);

/// Full-string parse of a finite double; throws SpecError otherwise.
double parse_double(std::string_view text);

/// "t,h,c" with shortest round-trip components.
std::string format_event(const Event& e);

/// Parse the CLI event literal "t,h,c" (three comma-separated finite
/// decimals, optional surrounding spaces); throws SpecError otherwise.
Event parse_event(std::string_view text);

} // namespace fingroup

#endif
