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

#ifndef KSCHEME_TESTS_SUPPORT_HPP
#define KSCHEME_TESTS_SUPPORT_HPP

#include "kscheme/macwilliams.hpp"
#include "kscheme/rational.hpp"
#include "kscheme/schemes.hpp"

#include <array>
#include <random>
#include <vector>

namespace kscheme::testing {

inline const std::array<Rational, 4> kBases = {Rational(-3), Rational(-2), Rational(2), Rational(3)};

inline std::vector<long> lambda_range(long lo, long hi) {
    std::vector<long> out;
    for (long l = lo; l <= hi; ++l) out.push_back(l);
    return out;
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return make_rational(num(rng), den(rng));
}

/// Desk-scale instances of every kind, q in {2, 3}.
inline std::vector<SchemeParams> desk_schemes() {
    std::vector<SchemeParams> out;
    for (long q : {2L, 3L}) {
        for (long n = 1; n <= 5; ++n) out.push_back(make_hamming(q, n));
        for (long n = 1; n <= 4; ++n) {
            for (long m = n; m <= n + 1; ++m) {
                out.push_back(make_bilinear(q, m, n));
                out.push_back(make_gabidulin(q, m, n));
            }
        }
        for (long t = 2; t <= 8; ++t) out.push_back(make_skew(q, t));
        for (long t = 1; t <= 4; ++t) out.push_back(make_hermitian(q, t));
    }
    return out;
}

}  // namespace kscheme::testing

#endif  // KSCHEME_TESTS_SUPPORT_HPP
