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

#ifndef KSCHEME_HOMPOLY_HPP
#define KSCHEME_HOMPOLY_HPP

#include "kscheme/rational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace kscheme {

/// Homogeneous polynomial sum_u a_u(lambda) Y^u X^{r-u} of fixed degree r.
///
/// Coefficients are pure functions of (u, lambda) because the b-product reads
/// its right factor at shifted parameters lambda - i. Values are immutable;
/// copies share the underlying coefficient function.
class HomPoly {
public:
    using CoeffFn = std::function<Rational(long u, long lambda)>;

    /// The zero polynomial (degree 0, coefficient 0).
    HomPoly();
    HomPoly(long degree, CoeffFn coeff);

    /// lambda-independent polynomial with coeffs[u] on Y^u X^{r-u}, r = coeffs.size() - 1.
    static HomPoly constant(std::vector<Rational> coeffs);
    static HomPoly scalar(const Rational& value) { return constant({value}); }
    static HomPoly monomial_x() { return constant({Rational(1), Rational(0)}); }
    static HomPoly monomial_y() { return constant({Rational(0), Rational(1)}); }

    long degree() const { return degree_; }

    /// True for the canonical zero polynomial produced by HomPoly() (and by
    /// derivatives taken past the degree).
    bool is_zero_polynomial() const { return zero_; }

    /// a_u(lambda); zero for u outside 0..degree.
    Rational coeff(long u, long lambda) const;

    std::vector<Rational> coefficients(long lambda) const;

    /// The polynomial whose coefficients at lambda are this one's at lambda - delta.
    HomPoly shifted(long delta) const;

    HomPoly scaled(const Rational& factor) const;

    /// Sum of two polynomials of equal degree. A zero polynomial adopts the
    /// other operand's degree.
    friend HomPoly operator+(const HomPoly& lhs, const HomPoly& rhs);

private:
    long degree_;
    CoeffFn coeff_;
    bool zero_ = false;
};

/// Coefficientwise equality at every lambda in `lambdas`. Two identically zero
/// polynomials compare equal whatever their nominal degrees.
bool equal_on(const HomPoly& lhs, const HomPoly& rhs, std::span<const long> lambdas);

/// b-product: degree r+s with c_u(lambda) = sum_i b^{i s} a_i(lambda) g_{u-i}(lambda - i).
/// Not commutative.
HomPoly b_product(const HomPoly& a, const HomPoly& g, const Rational& b);

/// a^{[0]} = 1, a^{[k]} = a * a^{[k-1]}.
HomPoly b_power(const HomPoly& a, long k, const Rational& b);

/// mu(X,Y;lambda) = X + (c b^lambda - 1) Y.
HomPoly mu(const Rational& b, const Rational& c);
/// nu(X,Y;lambda) = X - Y.
HomPoly nu();

/// Closed form of mu^{[k]}: coefficient [k u] gamma(lambda, u).
HomPoly mu_family(long k, const Rational& b, const Rational& c);
/// Closed form of nu^{[k]}: coefficient (-1)^u b^{sigma(u)} [k u].
HomPoly nu_family(long k, const Rational& b);

/// sum_i a_i Y^{[i]} * X^{[r-i]} for a lambda-independent a of degree r.
HomPoly b_transform(std::span<const Rational> coeffs, const Rational& b);

/// phi-th b-derivative (in X). Degree r - phi, zero once phi > r. At b = 1 this
/// is the ordinary partial derivative in X.
HomPoly b_derivative(const HomPoly& f, long phi, const Rational& b);

/// phi-th b^{-1}-derivative (in Y). At b = 1 this is the ordinary partial
/// derivative in Y.
HomPoly binv_derivative(const HomPoly& g, long phi, const Rational& b);

/// sum_u a_u(lambda) y^u x^{r-u}.
Rational evaluate(const HomPoly& f, const Rational& x, const Rational& y, long lambda);

namespace lemma {

/// delta(lambda, phi, j) = sum_i (-1)^i [j i] b^{sigma(i)} gamma(lambda - i, phi).
Rational delta_sum(long lambda, long phi, long j, const Rational& b, const Rational& c);
/// prod_{i<j} (b^phi - b^i) gamma(lambda - j, phi - j) (c b^{lambda-j})^j.
Rational delta_closed(long lambda, long phi, long j, const Rational& b, const Rational& c);

/// epsilon(Lambda, phi, i) as the defining double sum.
Rational epsilon_sum(long big_lambda, long phi, long i, const Rational& b);
/// (-1)^i b^{sigma(i)} [Lambda-i  Lambda-phi].
Rational epsilon_closed(long big_lambda, long phi, long i, const Rational& b);

}  // namespace lemma

}  // namespace kscheme

#endif  // KSCHEME_HOMPOLY_HPP
