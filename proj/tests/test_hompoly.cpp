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

#include "doctest.h"
#include "support.hpp"

#include "kscheme/combinatorics.hpp"
#include "kscheme/hompoly.hpp"

#include <memory>

using namespace kscheme;
using kscheme::testing::kBases;
using kscheme::testing::lambda_range;

namespace {

constexpr int kInstances = 200;

const std::vector<long> kLambdas = lambda_range(-2, 6);

std::vector<Rational> coeffs(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

bool has_coeffs(const HomPoly& f, long lambda, const std::vector<Rational>& expected) {
    return f.degree() + 1 == static_cast<long>(expected.size()) && f.coefficients(lambda) == expected;
}

/// Random polynomial of degree r. Half the time the coefficients depend on
/// lambda through powers of c b^lambda.
HomPoly random_poly(std::mt19937_64& rng, long r, const Rational& b, const Rational& c) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    auto a = std::make_shared<std::vector<long>>();
    auto e = std::make_shared<std::vector<int>>();
    const bool depends = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    for (long u = 0; u <= r; ++u) {
        a->push_back(coef(rng));
        e->push_back(depends ? expo(rng) : 0);
    }
    return HomPoly(r, [a, e, b, c](long u, long lambda) -> Rational {
        return Rational((*a)[u]) * pow(c * pow(b, lambda), (*e)[u]);
    });
}

HomPoly sum_or_zero(const std::vector<HomPoly>& terms) {
    HomPoly acc;
    for (const HomPoly& t : terms) acc = acc + t;
    return acc;
}

}  // namespace

TEST_SUITE("hompoly") {

TEST_CASE("b_product examples") {
    const Rational b(3);
    const HomPoly x = HomPoly::monomial_x();
    const HomPoly y = HomPoly::monomial_y();
    const HomPoly g = kscheme::mu_family(2, b, Rational(2));
    CHECK(equal_on(b_product(HomPoly::scalar(Rational(5)), g, b), g.scaled(Rational(5)), kLambdas));
    CHECK(equal_on(b_product(g, HomPoly::scalar(Rational(5)), b), g.scaled(Rational(5)), kLambdas));
    CHECK(has_coeffs(b_product(x, y, b), 0, coeffs({0, 1, 0})));
    CHECK(has_coeffs(b_product(y, x, b), 0, coeffs({0, 3, 0})));
}

TEST_CASE("b_power examples") {
    for (const Rational& b : kBases) {
        const Rational c(2);
        CHECK(has_coeffs(b_power(mu(b, c), 0, b), 4, coeffs({1})));
        const HomPoly nu2 = b_power(nu(), 2, b);
        for (long lambda : kLambdas) CHECK(nu2.coefficients(lambda) == std::vector<Rational>{1, -(1 + b), b});
        const HomPoly mu2 = b_power(mu(b, c), 2, b);
        for (long lambda : kLambdas) {
            const Rational t = c * pow(b, lambda);
            CHECK(mu2.coefficients(lambda) == std::vector<Rational>{1, (1 + b) * (t - 1), (t - 1) * (t - b)});
        }
    }
}

TEST_CASE("mu and nu families") {
    const Rational b(2);
    const Rational c(3);
    CHECK(has_coeffs(mu_family(0, b, c), 1, coeffs({1})));
    for (long lambda : kLambdas) CHECK(mu_family(1, b, c).coeff(1, lambda) == c * pow(b, lambda) - 1);
    CHECK(has_coeffs(mu_family(3, Rational(1), Rational(2)), 3, coeffs({1, 3, 3, 1})));
    CHECK(has_coeffs(nu_family(1, b), 0, coeffs({1, -1})));
    CHECK(has_coeffs(nu_family(2, Rational(2)), 0, coeffs({1, -3, 2})));
    CHECK(has_coeffs(nu_family(2, Rational(-2)), 0, coeffs({1, 1, -2})));
    CHECK_THROWS_AS(mu_family(-1, b, c), InvalidInput);

    for (const Rational& b2 : kBases) {
        for (const Rational& c2 : {Rational(1), Rational(2), Rational(-1), Rational(1, 3)}) {
            for (long k = 0; k <= 6; ++k) {
                CAPTURE(k);
                CHECK(equal_on(mu_family(k, b2, c2), b_power(mu(b2, c2), k, b2), lambda_range(0, 6)));
                CHECK(equal_on(nu_family(k, b2), b_power(nu(), k, b2), lambda_range(0, 6)));
            }
        }
    }
}

TEST_CASE("b_transform examples") {
    const Rational b(5);
    CHECK(has_coeffs(b_transform(coeffs({1}), b), 0, coeffs({1})));
    CHECK(has_coeffs(b_transform(coeffs({1, 0}), b), 0, coeffs({1, 0})));
    // Y * Y picks up b^{1*1} on Y^2.
    CHECK(has_coeffs(b_transform(coeffs({0, 0, 1}), b), 0, coeffs({0, 0, 5})));
    CHECK(b_transform(std::vector<Rational>{}, b).is_zero_polynomial());
}

TEST_CASE("derivative examples") {
    const Rational b(2);
    const HomPoly x2 = HomPoly::constant(coeffs({1, 0, 0}));
    const HomPoly y2 = HomPoly::constant(coeffs({0, 0, 1}));
    CHECK(equal_on(b_derivative(x2, 0, b), x2, kLambdas));
    CHECK(has_coeffs(b_derivative(x2, 1, b), 0, coeffs({3, 0})));
    CHECK(equal_on(binv_derivative(y2, 0, b), y2, kLambdas));
    CHECK(b_derivative(x2, 3, b).is_zero_polynomial());
    CHECK(binv_derivative(y2, 3, b).is_zero_polynomial());
    CHECK(binv_derivative(y2, 1, b).coefficients(0) == std::vector<Rational>{0, Rational(3, 2)});
    // b = 1 is the ordinary partial derivative.
    const HomPoly p = HomPoly::constant(coeffs({2, 5, 7, 1}));  // 2X^3 + 5YX^2 + 7Y^2X + Y^3
    CHECK(has_coeffs(b_derivative(p, 1, Rational(1)), 0, coeffs({6, 10, 7})));
    CHECK(has_coeffs(binv_derivative(p, 1, Rational(1)), 0, coeffs({5, 14, 3})));
    CHECK(has_coeffs(binv_derivative(p, 2, Rational(1)), 0, coeffs({14, 6})));
}

TEST_CASE("derivative closed forms") {
    for (const Rational& b : kBases) {
        for (const Rational& c : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
            for (long k = 0; k <= 6; ++k) {
                for (long phi = 0; phi <= k; ++phi) {
                    CAPTURE(b);
                    CAPTURE(k);
                    CAPTURE(phi);
                    const Rational bk = beta(k, phi, b);
                    CHECK(equal_on(b_derivative(mu_family(k, b, c), phi, b), mu_family(k - phi, b, c).scaled(bk),
                                   kLambdas));
                    CHECK(equal_on(b_derivative(nu_family(k, b), phi, b), nu_family(k - phi, b).scaled(bk), kLambdas));
                    const Rational sign = phi % 2 == 0 ? Rational(1) : Rational(-1);
                    CHECK(equal_on(binv_derivative(nu_family(k, b), phi, b), nu_family(k - phi, b).scaled(sign * bk),
                                   kLambdas));
                    const HomPoly shifted_mu = mu_family(k - phi, b, c).shifted(phi);
                    const HomPoly expected(k - phi, [=](long u, long lambda) -> Rational {
                        return pow(b, -sigma(phi)) * bk * gamma(lambda, phi, b, c) * shifted_mu.coeff(u, lambda);
                    });
                    CHECK(equal_on(binv_derivative(mu_family(k, b, c), phi, b), expected, kLambdas));
                }
            }
        }
    }
}

TEST_CASE("Leibniz rule for the b-derivative") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> deg(0, 5);
    std::uniform_int_distribution<long> order(0, 4);
    for (const Rational& b : kBases) {
        for (int trial = 0; trial < kInstances; ++trial) {
            const Rational c = kscheme::testing::random_rational(rng) + 3;
            const long r = deg(rng);
            const long s = deg(rng);
            const long phi = order(rng);
            const HomPoly f = random_poly(rng, r, b, c);
            const HomPoly g = random_poly(rng, s, b, c);
            std::vector<HomPoly> terms;
            for (long l = 0; l <= phi; ++l) {
                if (l > r || phi - l > s) continue;
                terms.push_back(b_product(b_derivative(f, l, b), b_derivative(g, phi - l, b), b)
                                    .scaled(gauss(phi, l, b) * pow(b, (phi - l) * (r - l))));
            }
            CAPTURE(b);
            CAPTURE(r);
            CAPTURE(s);
            CAPTURE(phi);
            CHECK(equal_on(b_derivative(b_product(f, g, b), phi, b), sum_or_zero(terms), kLambdas));
        }
    }
}

TEST_CASE("Leibniz rule for the b^-1-derivative") {
    std::mt19937_64 rng(4048);
    std::uniform_int_distribution<long> deg(0, 5);
    std::uniform_int_distribution<long> order(0, 4);
    for (const Rational& b : kBases) {
        for (int trial = 0; trial < kInstances; ++trial) {
            const Rational c = kscheme::testing::random_rational(rng) + 3;
            const long r = deg(rng);
            const long s = deg(rng);
            const long phi = order(rng);
            const HomPoly f = random_poly(rng, r, b, c);
            const HomPoly g = random_poly(rng, s, b, c);
            std::vector<HomPoly> terms;
            for (long l = 0; l <= phi; ++l) {
                if (l > r || phi - l > s) continue;
                terms.push_back(b_product(binv_derivative(f, l, b), binv_derivative(g, phi - l, b).shifted(l), b)
                                    .scaled(gauss(phi, l, b) * pow(b, l * (s - phi + l))));
            }
            CAPTURE(b);
            CAPTURE(r);
            CAPTURE(s);
            CAPTURE(phi);
            CHECK(equal_on(binv_derivative(b_product(f, g, b), phi, b), sum_or_zero(terms), kLambdas));
        }
    }
}

TEST_CASE("distributivity and scalars") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> deg(0, 4);
    for (const Rational& b : kBases) {
        for (int trial = 0; trial < kInstances; ++trial) {
            const Rational c = kscheme::testing::random_rational(rng) + 3;
            const long r = deg(rng);
            const long s = deg(rng);
            const HomPoly f1 = random_poly(rng, r, b, c);
            const HomPoly f2 = random_poly(rng, r, b, c);
            const HomPoly g = random_poly(rng, s, b, c);
            const Rational alpha = kscheme::testing::random_rational(rng);
            CHECK(equal_on(b_product(f1 + f2, g, b), b_product(f1, g, b) + b_product(f2, g, b), kLambdas));
            CHECK(equal_on(b_product(g, f1 + f2, b), b_product(g, f1, b) + b_product(g, f2, b), kLambdas));
            CHECK(equal_on(b_product(f1.scaled(alpha), g, b), b_product(f1, g.scaled(alpha), b), kLambdas));
            CHECK(equal_on(b_product(f1.scaled(alpha), g, b), b_product(f1, g, b).scaled(alpha), kLambdas));
        }
    }
}

TEST_CASE("evaluation lemmas") {
    CHECK(evaluate(HomPoly::scalar(Rational(1)), Rational(7), Rational(-2), 3) == 1);
    std::mt19937_64 rng(99);
    for (const Rational& b : kBases) {
        for (const Rational& c : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
            for (long lambda = -1; lambda <= 6; ++lambda) {
                for (long j = 0; j <= 6; ++j) {
                    if (j >= 1) CHECK(evaluate(nu_family(j, b), 1, 1, lambda) == 0);
                    CHECK(evaluate(mu_family(j, b, c), 1, 1, lambda) == pow(c * pow(b, lambda), j));
                    for (long l = 0; l <= j; ++l) {
                        CHECK(evaluate(b_derivative(nu_family(j, b), l, b), 1, 1, lambda) ==
                              (l == j ? beta(j, j, b) : Rational(0)));
                    }
                }
            }
        }
        for (int trial = 0; trial < kInstances; ++trial) {
            const Rational c = kscheme::testing::random_rational(rng) + 3;
            const long rho_deg = std::uniform_int_distribution<long>(0, 4)(rng);
            const long s = std::uniform_int_distribution<long>(0, 4)(rng);
            const HomPoly rho = random_poly(rng, rho_deg, b, c);
            const HomPoly prod = b_product(rho, mu_family(s, b, c), b);
            for (long lambda = -1; lambda <= 5; ++lambda) {
                CHECK(evaluate(prod, 1, 1, lambda) == pow(c * pow(b, lambda), s) * evaluate(rho, 1, 1, lambda));
            }
        }
    }
}

TEST_CASE("delta and epsilon lemmas") {
    std::mt19937_64 rng(3);
    for (const Rational& b : kBases) {
        for (int trial = 0; trial < kInstances; ++trial) {
            Rational c = kscheme::testing::random_rational(rng);
            if (c == 0) c = 1;
            const long lambda = std::uniform_int_distribution<long>(0, 8)(rng);
            const long phi = std::uniform_int_distribution<long>(0, 5)(rng);
            const long j = std::uniform_int_distribution<long>(0, 5)(rng);
            CAPTURE(lambda);
            CAPTURE(phi);
            CAPTURE(j);
            CHECK(lemma::delta_sum(lambda, phi, j, b, c) == lemma::delta_closed(lambda, phi, j, b, c));
        }
        for (long big = 0; big <= 8; ++big)
            for (long phi = 0; phi <= 5; ++phi)
                for (long i = 0; i <= 5; ++i)
                    CHECK(lemma::epsilon_sum(big, phi, i, b) == lemma::epsilon_closed(big, phi, i, b));
    }
}

TEST_CASE("HomPoly plumbing") {
    CHECK_THROWS_AS(HomPoly(-1, [](long, long) -> Rational { return 0; }), InvalidInput);
    CHECK_THROWS_AS(HomPoly::monomial_x() + HomPoly::constant(coeffs({1, 2, 3})), InvalidInput);
    const HomPoly x = HomPoly::monomial_x();
    CHECK(equal_on(HomPoly() + x, x, kLambdas));
    CHECK(x.coeff(5, 0) == 0);
    CHECK(x.coeff(-1, 0) == 0);
    CHECK(equal_on(HomPoly(), HomPoly(3, [](long, long) -> Rational { return 0; }), kLambdas));
}

}  // TEST_SUITE
