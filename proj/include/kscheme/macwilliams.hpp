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

#ifndef KSCHEME_MACWILLIAMS_HPP
#define KSCHEME_MACWILLIAMS_HPP

#include "kscheme/krawtchouk.hpp"
#include "kscheme/rational.hpp"
#include "kscheme/scheme_params.hpp"

#include <span>
#include <vector>

namespace kscheme {

/// Weight distribution (c_0, ..., c_n) of a code.
struct WeightDistribution {
    std::vector<BigInt> counts;

    long n() const { return static_cast<long>(counts.size()) - 1; }
    BigInt total() const;

    /// Smallest nonzero weight present, or n + 1 when the code is {0}.
    long minimum_distance() const;
    /// Largest weight present (0 for the zero code).
    long diameter() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution make_distribution(std::initializer_list<long> counts);

struct TransformInput {
    WeightDistribution dist;
    BigInt code_size;
    SchemeParams params;

    /// Throws InvalidInput unless the length is n + 1, the counts are
    /// nonnegative, c_0 >= 1, they sum to code_size and code_size divides |X|.
    void validate() const;

    /// |X| / |C|.
    BigInt dual_size() const;
};

/// c' = (1/|C|) c P via the eigenmatrix. Throws IdentityViolation when an
/// entry is negative or not an integer (the input cannot come from a linear code).
WeightDistribution transform_eigen(const TransformInput& in);
WeightDistribution transform_eigen(const TransformInput& in, const Eigenmatrix& eigen);

/// (1/|C|) sum_i c_i nu^{[i]} * mu^{[n-i]} evaluated at lambda = n, read off
/// coefficientwise. Same contract as transform_eigen().
WeightDistribution transform_functional(const TransformInput& in);

enum class TransformMethod { Eigen, Functional };

/// Transforms a batch of inputs in parallel. Results are in input order and
/// identical to transform_batch_serial(); the first failure is rethrown.
std::vector<WeightDistribution> transform_batch(std::span<const TransformInput> inputs, TransformMethod method);
std::vector<WeightDistribution> transform_batch_serial(std::span<const TransformInput> inputs, TransformMethod method);

struct MomentPair {
    Rational lhs;
    Rational rhs;

    bool balanced() const { return lhs == rhs; }
};

/// Moments from the b-derivative:
///   sum_{i<=n-phi} [n-i phi] c_i  =  (c b^n)^{n-phi}/|C^perp| sum_{i<=phi} [n-i n-phi] c'_i.
MomentPair moment_b(const TransformInput& in, long phi);
MomentPair moment_b(const SchemeParams& params, const WeightDistribution& dist, const WeightDistribution& dual,
                    const BigInt& dual_size, long phi);

/// Moments from the b^{-1}-derivative:
///   sum_{i>=phi} b^{phi(n-i)} [i phi] c_i
///     = (c b^n)^{n-phi}/|C^perp| sum_{i<=phi} (-1)^i b^{sigma(i)+i(phi-i)} [n-i n-phi] gamma(n-i,phi-i) c'_i.
MomentPair moment_binv(const TransformInput& in, long phi);
MomentPair moment_binv(const SchemeParams& params, const WeightDistribution& dist, const WeightDistribution& dual,
                       const BigInt& dual_size, long phi);

/// Right-hand sides once phi < d'_S, when c'_0 = 1 and c'_1..c'_phi vanish.
Rational moment_b_below_dual_distance(const SchemeParams& params, const BigInt& dual_size, long phi);
Rational moment_binv_below_dual_distance(const SchemeParams& params, const BigInt& dual_size, long phi);

/// sum_{i<=phi} (-1)^i b^{sigma(i)+i(phi-i)} [n-i n-phi] gamma(n-i,phi-i) c_i,
/// which vanishes whenever the dual diameter is below phi.
Rational moment_binv_diameter_sum(const SchemeParams& params, const WeightDistribution& dist, long phi);

/// Weight distribution of a maximal code (d_S + d'_S = n + 2) with minimum
/// distance d_s and |C| = code_size. Throws IdentityViolation when the
/// resulting counts are not nonnegative integers summing to code_size.
WeightDistribution maximal_distribution(const SchemeParams& params, long d_s, const BigInt& code_size);

/// x_j = sum_{i<=j} [l-i l-j] y_i with l = y.size() - 1.
std::vector<Rational> forward_triangular(std::span<const Rational> y, const Rational& b);
/// Inverse of forward_triangular(): y_i = sum_{j<=i} (-1)^{i-j} b^{sigma(i-j)} [l-j l-i] x_j.
std::vector<Rational> invert_triangular(std::span<const Rational> x, const Rational& b);

}  // namespace kscheme

#endif  // KSCHEME_MACWILLIAMS_HPP
