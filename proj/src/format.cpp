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

#include "fingroup/format.hpp"

#include "fingroup/errors.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace fingroup {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

double parse_double(std::string_view text) {
    const std::string_view s = trim(text);
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw SpecError("not a number: \"" + std::string(text) + "\"");
    }
    if (!std::isfinite(value)) {
        throw SpecError("not a finite number: \"" + std::string(text) + "\"");
    }
    return value;
}

std::string format_event(const Event& e) {
    return format_double(e.t) + "," + format_double(e.h) + "," + format_double(e.c);
}

Event parse_event(std::string_view text) {
    double parts[3];
    std::size_t n = 0;
    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        if (n == 3) {
            throw SpecError("event literal must be t,h,c: \"" + std::string(text) + "\"");
        }
        parts[n++] = parse_double(token);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (n != 3) {
        throw SpecError("event literal must be t,h,c: \"" + std::string(text) + "\"");
    }
    return Event{parts[0], parts[1], parts[2]};
}

} // namespace fingroup
