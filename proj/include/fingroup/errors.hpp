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

#ifndef FINGROUP_ERRORS_HPP
#define FINGROUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fingroup {

/// Base class for all fingroup errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A capitalization factor was asked beyond its representable range
/// (the growth exponent would overflow double precision).
class RangeError : public Error {
public:
    using Error::Error;
};

/// An operation required an invertible event (nonzero capital) or an
/// invertible center and got a zero one.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// A factor-spec file or event literal could not be parsed, or describes
/// an ill-formed factor (unknown kind, unknown keys, bad sample table).
class SpecError : public Error {
public:
    using Error::Error;
};

/// A verification law id is not in the registry.
class UnknownLawError : public Error {
public:
    using Error::Error;
};

} // namespace fingroup

#endif
