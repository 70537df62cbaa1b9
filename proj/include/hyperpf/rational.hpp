/*
 * Copyright 2026 The hyperpf Authors
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

#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperpf {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p" (decimal, optional leading sign).  Throws
/// ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned r);

}  // namespace hyperpf
