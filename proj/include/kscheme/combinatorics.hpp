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

#ifndef KSCHEME_COMBINATORICS_HPP
#define KSCHEME_COMBINATORICS_HPP

#include "kscheme/rational.hpp"

namespace kscheme {

/// sigma(i) = i(i-1)/2.
long sigma(long i);

/// b-nary Gaussian coefficient
///
///     [x k]_b = prod_{i<k} (b^x - b^i) / (b^k - b^i)
///
/// with [x 0]_b = 1 and [x k]_b = 0 for k > x. At b = 1 this is the ordinary
/// binomial coefficient. Requires x, k >= 0 and b != 0.
Rational gauss(long x, long k, const Rational& b);

/// Same as gauss() but returns 0 instead of throwing when x < 0 or k < 0.
/// Several summation identities rely on this convention at their boundaries.
Rational gauss_or_zero(long x, long k, const Rational& b);

/// b-nary beta function prod_{i<k} [x-i 1]_b, defined for every integer x.
/// At b = 1 this is the falling factorial x(x-1)...(x-k+1).
Rational beta(long x, long k, const Rational& b);

/// b-nary gamma function prod_{i<k} (c b^x - b^i).
Rational gamma(long x, long k, const Rational& b, const Rational& c);

}  // namespace kscheme

#endif  // KSCHEME_COMBINATORICS_HPP
