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

#ifndef KSCHEME_ORACLE_CODE_HPP
#define KSCHEME_ORACLE_CODE_HPP

#include "kscheme/macwilliams.hpp"
#include "kscheme/oracle/space.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace kscheme::oracle {

/// Linear code given by generators that are independent over the scalar field
/// of the ambient space (F_{q^m} for Gabidulin, F_q otherwise).
struct CodeSpec {
    SchemeParams params;
    std::vector<SchemeElement> generators;
};

/// Largest code enumerate_code and weight_distribution will walk.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

/// Generators as coordinate vectors. Throws InvalidInput when a generator is
/// malformed or the generators are dependent.
std::vector<Coords> generator_coords(const AmbientSpace& space, const CodeSpec& code);

long dimension(const AmbientSpace& space, const CodeSpec& code);
/// |scalars|^dimension.
BigInt code_size(const AmbientSpace& space, const CodeSpec& code);

/// Calls `visit` once per codeword. Throws InvalidInput above the size guard.
void for_each_codeword(const AmbientSpace& space, const CodeSpec& code,
                       const std::function<void(const Coords&)>& visit);
std::vector<SchemeElement> enumerate_code(const AmbientSpace& space, const CodeSpec& code);

/// Kernel of the pairing restricted to the code.
CodeSpec dual_code(const AmbientSpace& space, const CodeSpec& code);
/// True when both codes span the same subspace.
bool same_span(const AmbientSpace& space, const CodeSpec& a, const CodeSpec& b);

WeightDistribution weight_distribution(const AmbientSpace& space, const CodeSpec& code);
WeightDistribution weight_distribution_serial(const AmbientSpace& space, const CodeSpec& code);

CodeSpec zero_code(const AmbientSpace& space);
CodeSpec full_code(const AmbientSpace& space);
/// Code of the requested dimension with generators drawn by a seeded PRNG.
CodeSpec random_code(const AmbientSpace& space, long dim, std::uint64_t seed);
/// Same, with the dimension itself drawn from 0..dimension(space).
CodeSpec random_code(const AmbientSpace& space, std::uint64_t seed);

/// Generators from JSON: an array whose items are either flat integer arrays
/// (row-major entries) or arrays of rows. Entries use the field encoding of
/// FiniteField.
CodeSpec parse_generators(const AmbientSpace& space, std::string_view json);

}  // namespace kscheme::oracle

#endif  // KSCHEME_ORACLE_CODE_HPP
