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

#ifndef KSCHEME_SCHEME_PARAMS_HPP
#define KSCHEME_SCHEME_PARAMS_HPP

#include "kscheme/rational.hpp"

#include <string>
#include <string_view>

namespace kscheme {

enum class SchemeKind { Hamming, Bilinear, Gabidulin, Skew, Hermitian };

std::string_view kind_name(SchemeKind kind);
SchemeKind parse_kind(std::string_view name);

/// One instance of a Krawtchouk association scheme.
///
/// `q` is the base field order. `m` carries the second dimension for
/// Bilinear/Gabidulin (m >= n) and the matrix size t for Skew/Hermitian; it is
/// unused (0) for Hamming. Every formula in the algebraic core runs off
/// (b, c, n) only.
struct SchemeParams {
    SchemeKind kind = SchemeKind::Hamming;
    long q = 2;
    long m = 0;
    long n = 1;
    Rational b = 1;
    Rational c = 2;
    BigInt space_size = 2;

    /// c * b^n, the value of c b^lambda at lambda = n.
    Rational cbn() const { return c * pow(b, n); }

    /// t for Skew/Hermitian, m for Bilinear/Gabidulin, n for Hamming.
    long raw_dimension() const { return kind == SchemeKind::Hamming ? n : m; }

    std::string describe() const;

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

}  // namespace kscheme

#endif  // KSCHEME_SCHEME_PARAMS_HPP
