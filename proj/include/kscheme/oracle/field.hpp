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

#ifndef KSCHEME_ORACLE_FIELD_HPP
#define KSCHEME_ORACLE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace kscheme::oracle {

/// Field element. Encodes the polynomial sum_i d_i x^i over F_p as the
/// integer sum_i d_i p^i, so the prime subfield is exactly {0, ..., p-1}.
using Elem = std::uint8_t;

/// Small finite field F_{p^k} with full operation tables. Orders up to 16.
class FiniteField {
public:
    /// Builds F_order using the lexicographically smallest monic irreducible
    /// modulus. Throws InvalidInput for non prime powers and orders above 16.
    explicit FiniteField(int order);

    int order() const { return order_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }
    /// Coefficients c_0..c_k of the monic modulus (c_k = 1).
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Multiplicative inverse; throws InvalidInput for zero.
    Elem inv(Elem a) const;
    Elem pow(Elem a, long e) const;

    /// a -> a^{p^r}.
    Elem frobenius(Elem a, int r = 1) const;

    /// Absolute trace to F_p: sum_{i<k} a^{p^i}. The result is a prime-field element.
    Elem absolute_trace(Elem a) const;

    /// True when a lies in the subfield of order `sub_order` (a^{sub_order} = a).
    bool in_subfield(Elem a, int sub_order) const { return pow(a, sub_order) == a; }

private:
    std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * order_ + b; }

    int order_;
    int p_;
    int k_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

}  // namespace kscheme::oracle

#endif  // KSCHEME_ORACLE_FIELD_HPP
