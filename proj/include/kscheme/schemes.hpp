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

#ifndef KSCHEME_SCHEMES_HPP
#define KSCHEME_SCHEMES_HPP

#include "kscheme/hompoly.hpp"
#include "kscheme/scheme_params.hpp"

#include <span>
#include <string>
#include <vector>

namespace kscheme {

bool is_prime_power(long q);

SchemeParams make_hamming(long q, long n);
/// m x n matrices over F_q, m >= n.
SchemeParams make_bilinear(long q, long m, long n);
/// Length-n vectors over F_{q^m}, m >= n.
SchemeParams make_gabidulin(long q, long m, long n);
/// Alternating t x t matrices over F_q; n = floor(t/2) classes.
SchemeParams make_skew(long q, long t);
/// Hermitian t x t matrices over F_{q^2}; n = t classes.
SchemeParams make_hermitian(long q, long t);

/// Dispatches on kind. dims is {n} for Hamming, {m, n} for Bilinear and
/// Gabidulin, {t} for Skew and Hermitian. With require_prime_power the field
/// order is validated as well (needed whenever the brute-force oracle runs).
SchemeParams make_scheme(SchemeKind kind, long q, std::span<const long> dims, bool require_prime_power = false);

/// Number of elements of weight omega: [n omega] gamma(n, omega).
BigInt xi(const SchemeParams& params, long omega);
std::vector<BigInt> xi_vector(const SchemeParams& params);

/// Weight enumerator of the whole space, sum_i xi_i Y^i X^{n-i}. Cross-checked
/// against mu^{[n]}(X,Y;n).
HomPoly omega_enumerator(const SchemeParams& params);

struct HermitianRecurrenceViolation {
    long k;
    long x;
    long t;
    bool schmidt_form;   ///< C_{k+1}(x+1,t+1) = C_{k+1}(x,t+1) + b^{2t+1-x} C_k(x,t) failed
    bool delsarte_form;  ///< C_{k+1}(x+1,t+1) = b^{k+1} C_{k+1}(x,t) - b^k C_k(x,t) failed
};

/// Exhaustively compares both Hermitian recurrences (b = -q, c = -1) for all
/// 0 <= x, k <= t < tMax.
std::vector<HermitianRecurrenceViolation> hermitian_recurrence_equiv(long q, long tMax);

}  // namespace kscheme

#endif  // KSCHEME_SCHEMES_HPP
