/*
 * Copyright 2026 The crystile Authors
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

#ifndef CRYSTILE_RATIONAL_HPP
#define CRYSTILE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace crystile {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed user input (files, flags, group descriptions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition does not hold for a well-formed input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational ratio(long num, long den);

/// Parses "p/q", "-p/q" or a plain integer. Decimal points are rejected.
Rational parse_rational(std::string_view text);

/// Formats as "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// value - floor(value), always in [0, 1).
Rational frac(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Smallest integer k >= 0 with k*k >= value (value >= 0).
Integer ceil_sqrt(const Rational& value);

/// Rational r with r <= value and value - r <= value * rel (value > 0), r > 0.
Rational rational_below(double value, double rel = 1e-12);

}  // namespace crystile

#endif  // CRYSTILE_RATIONAL_HPP
