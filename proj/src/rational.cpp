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

#include "kscheme/rational.hpp"

namespace kscheme {

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw InvalidInput("zero raised to a negative power");
        Rational inv = 1 / b;
        return pow(inv, -e);
    }
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    // numerator and denominator stay coprime, and the sign lives in the numerator
    return result;
}

BigInt to_integer(const Rational& r, const char* what) {
    if (!is_integer(r)) {
        throw IdentityViolation(std::string(what) + ": expected an integer, got " + to_string(r));
    }
    return r.get_num();
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw InvalidInput("not a rational number: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace kscheme
