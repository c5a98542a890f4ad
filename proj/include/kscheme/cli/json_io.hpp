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

#ifndef KSCHEME_CLI_JSON_IO_HPP
#define KSCHEME_CLI_JSON_IO_HPP

#include "kscheme/macwilliams.hpp"
#include "kscheme/scheme_params.hpp"

#include "json.hpp"

#include <string_view>

namespace kscheme::cli {

/// Insertion-ordered so output is stable and diffable.
using Json = nlohmann::ordered_json;

/// {"kind": "hamming", "q": 2, "n": 3}; bilinear/gabidulin take "m" and "n",
/// skew/hermitian take "t".
SchemeParams scheme_from_json(const Json& spec, bool require_prime_power = false);
/// Inline JSON when the text starts with '{', otherwise a path to a JSON file.
SchemeParams parse_scheme(std::string_view text_or_path, bool require_prime_power = false);
Json scheme_to_json(const SchemeParams& params);

/// JSON number when |v| <= 2^53, decimal string otherwise.
Json to_json(const BigInt& v);
/// Integers as above, everything else as "p/q".
Json to_json(const Rational& v);
Json to_json(const WeightDistribution& d);

/// "[1,0,0,1]" or "1,0,0,1"; entries may be numbers or decimal strings.
WeightDistribution parse_weights(std::string_view text);
BigInt parse_count(std::string_view text, std::string_view what);

}  // namespace kscheme::cli

#endif  // KSCHEME_CLI_JSON_IO_HPP
