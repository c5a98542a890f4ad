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

#ifndef KSCHEME_ORACLE_SPACE_HPP
#define KSCHEME_ORACLE_SPACE_HPP

#include "kscheme/oracle/field.hpp"
#include "kscheme/oracle/linalg.hpp"
#include "kscheme/scheme_params.hpp"

#include <cstdint>
#include <vector>

namespace kscheme::oracle {

/// Coordinates of a point of the ambient space over its scalar field.
using Coords = std::vector<Elem>;

/// Concrete point of a scheme's space, stored row-major over the entry field:
///   Hamming    1 x n vector over F_q
///   Bilinear   m x n matrix over F_q
///   Gabidulin  1 x n vector over F_{q^m}
///   Skew       t x t alternating matrix over F_q
///   Hermitian  t x t Hermitian matrix over F_{q^2} (conjugation a -> a^q)
struct SchemeElement {
    SchemeKind kind = SchemeKind::Hamming;
    long rows = 0;
    long cols = 0;
    std::vector<Elem> entries;

    Elem at(long i, long j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }

    friend bool operator==(const SchemeElement&, const SchemeElement&) = default;
};

/// The space X of a scheme as a vector space over its scalar field, together
/// with the scheme weight and the nondegenerate pairing defining duals.
///
/// Scalars are F_q except for Gabidulin, where codes are F_{q^m}-linear.
/// Hermitian matrices form an F_q-space (dimension t^2) with entries in
/// F_{q^2}. Gabidulin and Hermitian need q prime so that F_q is the prime
/// subfield of the entry field.
///
/// Pairings:
///   Hamming, Gabidulin  sum_i x_i y_i
///   Bilinear            Trace(A B^T) = sum_ij A_ij B_ij
///   Skew                sum_{i<j} A_ij B_ij
///   Hermitian           Trace(A B), which lies in F_q
class AmbientSpace {
public:
    explicit AmbientSpace(const SchemeParams& params);

    const SchemeParams& params() const { return params_; }
    const FiniteField& scalars() const { return scalars_; }
    const FiniteField& entries() const { return entries_; }

    long dimension() const { return dim_; }
    /// Number of points, |scalars|^dimension.
    std::uint64_t size() const { return size_; }

    SchemeElement element(const Coords& x) const;
    /// Inverse of element(). Throws InvalidInput if the element violates the
    /// structural constraint of its kind.
    Coords coordinates(const SchemeElement& e) const;

    /// Point number `index` in base-|scalars| digit order, index < size().
    Coords point(std::uint64_t index) const;
    std::uint64_t index_of(const Coords& x) const;

    long weight(const Coords& x) const;
    Elem pairing(const Coords& x, const Coords& y) const;
    /// Gram matrix of the pairing on the coordinate basis (nonsingular).
    const Matrix& gram() const { return gram_; }

    Coords add(const Coords& x, const Coords& y) const;
    Coords sub(const Coords& x, const Coords& y) const;
    Coords scale(Elem a, const Coords& x) const;
    Coords zero() const { return Coords(static_cast<std::size_t>(dim_), 0); }

private:
    long matrix_weight(const SchemeElement& e) const;

    SchemeParams params_;
    FiniteField scalars_;
    FiniteField entries_;
    FiniteField base_;  // F_q, used for Gabidulin rank
    long dim_;
    std::uint64_t size_;
    Matrix gram_;
};

/// Scheme weight of a structurally valid element.
long weight(const AmbientSpace& space, const SchemeElement& e);

}  // namespace kscheme::oracle

#endif  // KSCHEME_ORACLE_SPACE_HPP
