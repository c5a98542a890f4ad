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

#include "kscheme/hompoly.hpp"

#include "kscheme/combinatorics.hpp"

#include <memory>
#include <string>
#include <utility>

namespace kscheme {

HomPoly::HomPoly() : HomPoly(0, [](long, long) -> Rational { return Rational(0); }) { zero_ = true; }

HomPoly::HomPoly(long degree, CoeffFn coeff) : degree_(degree), coeff_(std::move(coeff)) {
    if (degree_ < 0) throw InvalidInput("HomPoly: negative degree " + std::to_string(degree_));
    if (!coeff_) throw InvalidInput("HomPoly: empty coefficient function");
}

HomPoly HomPoly::constant(std::vector<Rational> coeffs) {
    if (coeffs.empty()) return HomPoly();
    auto shared = std::make_shared<const std::vector<Rational>>(std::move(coeffs));
    const long degree = static_cast<long>(shared->size()) - 1;
    return HomPoly(degree, [shared](long u, long) -> Rational { return (*shared)[static_cast<std::size_t>(u)]; });
}

Rational HomPoly::coeff(long u, long lambda) const {
    if (u < 0 || u > degree_) return Rational(0);
    return coeff_(u, lambda);
}

std::vector<Rational> HomPoly::coefficients(long lambda) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(degree_ + 1));
    for (long u = 0; u <= degree_; ++u) out.push_back(coeff(u, lambda));
    return out;
}

HomPoly HomPoly::shifted(long delta) const {
    if (zero_) return *this;
    return HomPoly(degree_, [fn = coeff_, delta](long u, long lambda) -> Rational { return fn(u, lambda - delta); });
}

HomPoly HomPoly::scaled(const Rational& factor) const {
    if (zero_) return *this;
    return HomPoly(degree_, [fn = coeff_, factor](long u, long lambda) -> Rational { return factor * fn(u, lambda); });
}

HomPoly operator+(const HomPoly& lhs, const HomPoly& rhs) {
    if (lhs.degree() != rhs.degree()) {
        if (lhs.is_zero_polynomial()) return rhs;
        if (rhs.is_zero_polynomial()) return lhs;
        throw InvalidInput("HomPoly sum needs equal degrees (" + std::to_string(lhs.degree()) + " vs " +
                           std::to_string(rhs.degree()) + ")");
    }
    return HomPoly(lhs.degree(), [lhs, rhs](long u, long lambda) -> Rational { return lhs.coeff(u, lambda) + rhs.coeff(u, lambda); });
}

bool equal_on(const HomPoly& lhs, const HomPoly& rhs, std::span<const long> lambdas) {
    const long top = std::max(lhs.degree(), rhs.degree());
    for (long lambda : lambdas) {
        for (long u = 0; u <= top; ++u) {
            const Rational left = u <= lhs.degree() ? lhs.coeff(u, lambda) : Rational(0);
            const Rational right = u <= rhs.degree() ? rhs.coeff(u, lambda) : Rational(0);
            if (left != right) return false;
        }
    }
    if (lhs.degree() == rhs.degree()) return true;
    // Different nominal degrees only agree when both sides are identically zero.
    for (long lambda : lambdas) {
        for (long u = 0; u <= top; ++u) {
            if (lhs.coeff(u, lambda) != 0 || rhs.coeff(u, lambda) != 0) return false;
        }
    }
    return true;
}

HomPoly b_product(const HomPoly& a, const HomPoly& g, const Rational& b) {
    const long r = a.degree();
    const long s = g.degree();
    const Rational bs = pow(b, s);
    return HomPoly(r + s, [a, g, bs, r](long u, long lambda) -> Rational {
        Rational sum = 0;
        Rational weight = 1;  // b^{i s}
        for (long i = 0; i <= u && i <= r; ++i) {
            sum += weight * a.coeff(i, lambda) * g.coeff(u - i, lambda - i);
            weight *= bs;
        }
        return sum;
    });
}

HomPoly b_power(const HomPoly& a, long k, const Rational& b) {
    if (k < 0) throw InvalidInput("b_power: negative exponent");
    HomPoly result = HomPoly::scalar(1);
    for (long i = 0; i < k; ++i) result = b_product(a, result, b);
    return result;
}

HomPoly mu(const Rational& b, const Rational& c) {
    return HomPoly(1, [b, c](long u, long lambda) -> Rational { return u == 0 ? Rational(1) : c * pow(b, lambda) - 1; });
}

HomPoly nu() { return HomPoly::constant({Rational(1), Rational(-1)}); }

HomPoly mu_family(long k, const Rational& b, const Rational& c) {
    if (k < 0) throw InvalidInput("mu_family: negative k");
    return HomPoly(k, [k, b, c](long u, long lambda) -> Rational { return gauss(k, u, b) * gamma(lambda, u, b, c); });
}

HomPoly nu_family(long k, const Rational& b) {
    if (k < 0) throw InvalidInput("nu_family: negative k");
    std::vector<Rational> coeffs;
    for (long u = 0; u <= k; ++u) {
        Rational v = pow(b, sigma(u)) * gauss(k, u, b);
        coeffs.push_back(u % 2 == 0 ? v : Rational(-v));
    }
    return HomPoly::constant(std::move(coeffs));
}

HomPoly b_transform(std::span<const Rational> coeffs, const Rational& b) {
    if (coeffs.empty()) return HomPoly();
    const long r = static_cast<long>(coeffs.size()) - 1;
    const HomPoly x = HomPoly::monomial_x();
    const HomPoly y = HomPoly::monomial_y();
    HomPoly sum(r, [](long, long) -> Rational { return Rational(0); });
    for (long i = 0; i <= r; ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
        HomPoly term = b_product(b_power(y, i, b), b_power(x, r - i, b), b);
        sum = sum + term.scaled(coeffs[static_cast<std::size_t>(i)]);
    }
    return sum;
}

HomPoly b_derivative(const HomPoly& f, long phi, const Rational& b) {
    if (phi < 0) throw InvalidInput("b_derivative: negative order");
    if (phi == 0) return f;
    const long r = f.degree();
    if (phi > r) return HomPoly();
    // (X^l)^(phi) = beta(l, phi) X^{l-phi}; beta at b = 1 is the falling
    // factorial, which is the classical derivative.
    return HomPoly(r - phi, [f, phi, r, b](long i, long lambda) -> Rational { return f.coeff(i, lambda) * beta(r - i, phi, b); });
}

HomPoly binv_derivative(const HomPoly& g, long phi, const Rational& b) {
    if (phi < 0) throw InvalidInput("binv_derivative: negative order");
    if (phi == 0) return g;
    const long s = g.degree();
    if (phi > s) return HomPoly();
    // (Y^i)^{phi} = b^{phi(1-i) + sigma(phi)} beta(i, phi) Y^{i-phi}.
    return HomPoly(s - phi, [g, phi, b](long u, long lambda) -> Rational {
        const long i = u + phi;
        return g.coeff(i, lambda) * pow(b, phi * (1 - i) + sigma(phi)) * beta(i, phi, b);
    });
}

Rational evaluate(const HomPoly& f, const Rational& x, const Rational& y, long lambda) {
    Rational sum = 0;
    const long r = f.degree();
    for (long u = 0; u <= r; ++u) {
        const Rational a = f.coeff(u, lambda);
        if (a == 0) continue;
        sum += a * pow(y, u) * pow(x, r - u);
    }
    return sum;
}

namespace lemma {

Rational delta_sum(long lambda, long phi, long j, const Rational& b, const Rational& c) {
    Rational sum = 0;
    for (long i = 0; i <= j; ++i) {
        Rational term = gauss(j, i, b) * pow(b, sigma(i)) * gamma(lambda - i, phi, b, c);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational delta_closed(long lambda, long phi, long j, const Rational& b, const Rational& c) {
    // prod_{i<j} (b^phi - b^i) contains the factor at i = phi whenever phi < j.
    if (phi < j) return Rational(0);
    Rational prod = 1;
    for (long i = 0; i < j; ++i) prod *= pow(b, phi) - pow(b, i);
    return prod * gamma(lambda - j, phi - j, b, c) * pow(c * pow(b, lambda - j), j);
}

Rational epsilon_sum(long big_lambda, long phi, long i, const Rational& b) {
    Rational sum = 0;
    for (long l = 0; l <= i; ++l) {
        Rational prod = 1;
        for (long j = 0; j < i - l; ++j) prod *= pow(b, phi - l) - pow(b, j);
        Rational term = gauss_or_zero(i, l, b) * gauss_or_zero(big_lambda - i, phi - l, b) *
                        pow(b, l * (big_lambda - phi) + sigma(l)) * prod;
        if (l % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational epsilon_closed(long big_lambda, long phi, long i, const Rational& b) {
    Rational v = pow(b, sigma(i)) * gauss_or_zero(big_lambda - i, big_lambda - phi, b);
    return i % 2 == 0 ? v : Rational(-v);
}

}  // namespace lemma

}  // namespace kscheme
