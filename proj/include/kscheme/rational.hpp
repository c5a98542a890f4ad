/*
 * Copyright 2026 The kscheme Authors
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

#ifndef KSCHEME_RATIONAL_HPP
#define KSCHEME_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kscheme {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised when caller-supplied data is malformed or out of range.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold exactly does not, or when a
/// distribution cannot come from a linear code.
class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// b^e for any integer e; negative exponents invert. 0^0 = 1.
Rational pow(const Rational& b, long e);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Numerator of r, throwing IdentityViolation when r is not integral.
BigInt to_integer(const Rational& r, const char* what);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace kscheme

#endif  // KSCHEME_RATIONAL_HPP
