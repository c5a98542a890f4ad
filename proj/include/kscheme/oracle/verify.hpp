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

#ifndef KSCHEME_ORACLE_VERIFY_HPP
#define KSCHEME_ORACLE_VERIFY_HPP

#include "kscheme/oracle/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kscheme::oracle {

/// Largest space the character sums will walk.
inline constexpr std::uint64_t kCharacterSumLimit = std::uint64_t{1} << 16;
/// Largest space verify_scheme_axioms accepts.
inline constexpr std::uint64_t kAxiomLimit = std::uint64_t{1} << 12;

/// sum over weight-k points e of (-1)^{Tr <e, y>} for a point y of weight x.
/// Requires characteristic 2. Throws IdentityViolation if two different
/// weight-x representatives give different sums.
long char_eigenvalue(const AmbientSpace& space, long k, long x);

/// All character sums at once, entry [x][k] as in char_eigenvalue. The
/// parallel and serial versions return identical tables.
std::vector<std::vector<long>> char_eigenmatrix(const AmbientSpace& space);
std::vector<std::vector<long>> char_eigenmatrix_serial(const AmbientSpace& space);

struct AxiomReport {
    std::vector<std::string> violations;
    /// intersection[i][j][k] = c_ijk as observed (first pair of R_k).
    std::vector<std::vector<std::vector<long>>> intersection;
    std::vector<long> valencies;
    long pairs_checked = 0;
    bool exhaustive = false;

    bool passed() const { return violations.empty(); }
};

/// Builds R_i = {(x, y) : weight(x - y) = i} over the whole space and checks
/// the association scheme axioms. Intersection numbers are checked on every
/// pair when |X|^3 is small, otherwise on `samples` seeded pairs per relation.
AxiomReport verify_scheme_axioms(const AmbientSpace& space, std::uint64_t seed = 1, long samples = 16);

}  // namespace kscheme::oracle

#endif  // KSCHEME_ORACLE_VERIFY_HPP
