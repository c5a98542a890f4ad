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

#include "kscheme/combinatorics.hpp"

#include <string>

namespace kscheme {

long sigma(long i) {
    if (i < 0) throw InvalidInput("sigma: negative argument " + std::to_string(i));
    return i * (i - 1) / 2;
}

namespace {

// [y 1]_b for any integer y: (b^y - 1)/(b - 1), or y itself at b = 1.
Rational unit_gauss(long y, const Rational& b) {
    if (b == 1) return Rational(y);
    return (pow(b, y) - 1) / (b - 1);
}

Rational binomial(long x, long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace

Rational gauss(long x, long k, const Rational& b) {
    if (x < 0 || k < 0) {
        throw InvalidInput("gauss: negative argument (x=" + std::to_string(x) + ", k=" + std::to_string(k) + ")");
    }
    if (b == 0) throw InvalidInput("gauss: base b must be nonzero");
    if (k == 0) return Rational(1);
    if (k > x) return Rational(0);
    if (b == 1) return binomial(x, k);

    // b = -1 makes some b^k - b^i vanish; every scheme in scope has |b| != 1
    // apart from the b = 1 limit handled above.
    if (b == -1) throw InvalidInput("gauss: base b = -1 is degenerate");

    Rational num = 1;
    Rational den = 1;
    const Rational bx = pow(b, x);
    const Rational bk = pow(b, k);
    Rational bi = 1;
    for (long i = 0; i < k; ++i) {
        num *= bx - bi;
        den *= bk - bi;
        bi *= b;
    }
    return num / den;
}

Rational gauss_or_zero(long x, long k, const Rational& b) {
    if (x < 0 || k < 0) return Rational(0);
    return gauss(x, k, b);
}

Rational beta(long x, long k, const Rational& b) {
    if (k < 0) throw InvalidInput("beta: negative k");
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= unit_gauss(x - i, b);
    return r;
}

Rational gamma(long x, long k, const Rational& b, const Rational& c) {
    if (k < 0) throw InvalidInput("gamma: negative k");
    const Rational cbx = c * pow(b, x);
    Rational r = 1;
    Rational bi = 1;
    for (long i = 0; i < k; ++i) {
        r *= cbx - bi;
        bi *= b;
    }
    return r;
}

}  // namespace kscheme
