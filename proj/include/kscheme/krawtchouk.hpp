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

#ifndef KSCHEME_KRAWTCHOUK_HPP
#define KSCHEME_KRAWTCHOUK_HPP

#include "kscheme/rational.hpp"
#include "kscheme/scheme_params.hpp"

#include <vector>

namespace kscheme {

/// b-Krawtchouk polynomial
///
///     C_k(x,n) = sum_j (-1)^j b^{j(n-x)} b^{sigma(j)} [x j] [n-x k-j] gamma(n-j, k-j).
Rational c_poly(long k, long x, long n, const Rational& b, const Rational& c);
Rational c_poly(long k, long x, const SchemeParams& params);

/// Delsarte's generalised Krawtchouk polynomial
///
///     P_k(x,n) = sum_j (-1)^{k-j} (c b^n)^j b^{binom(k-j,2)} [n-j n-k] [n-x j].
///
/// Term-by-term different from c_poly() but equal as a sum.
Rational delsarte_p(long k, long x, long n, const Rational& b, const Rational& c);
Rational delsarte_p(long k, long x, const SchemeParams& params);

/// (n+1)x(n+1) eigenmatrix with entry (i,k) = P_k(i). Construction evaluates
/// both closed forms and throws IdentityViolation if they disagree anywhere.
class Eigenmatrix {
public:
    explicit Eigenmatrix(const SchemeParams& params);

    const Rational& operator()(long i, long k) const { return entries_[index(i, k)]; }
    long size() const { return dim_; }
    const SchemeParams& params() const { return params_; }

    /// Valencies v_k, i.e. row 0.
    std::vector<Rational> valencies() const;

    /// P * P == |X| * I, exactly.
    bool is_scaled_involution() const;

    /// sum_i v_i P_k(i) P_l(i) == |X| v_k delta_{kl} for all k, l.
    bool is_orthogonal() const;

private:
    std::size_t index(long i, long k) const { return static_cast<std::size_t>(i * dim_ + k); }

    SchemeParams params_;
    long dim_;
    std::vector<Rational> entries_;
};

struct RecurrenceViolation {
    long k;
    long x;
    long n;
};

/// Checks C_{k+1}(x+1,n+1) = b^{k+1} C_{k+1}(x,n) - b^k C_k(x,n) for all
/// 0 <= x, k <= n < maxN with (b, c) held fixed. Returns the failures.
std::vector<RecurrenceViolation> check_recurrence(const Rational& b, const Rational& c, long maxN);
std::vector<RecurrenceViolation> check_recurrence(const SchemeParams& params, long maxN);

}  // namespace kscheme

#endif  // KSCHEME_KRAWTCHOUK_HPP
