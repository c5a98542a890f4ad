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

// Acceptance suite: one PASS/FAIL line per criterion, every comparison exact.

#include "kscheme/combinatorics.hpp"
#include "kscheme/hompoly.hpp"
#include "kscheme/krawtchouk.hpp"
#include "kscheme/macwilliams.hpp"
#include "kscheme/oracle/code.hpp"
#include "kscheme/oracle/verify.hpp"
#include "kscheme/schemes.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace kscheme;
using namespace kscheme::oracle;

namespace {

struct Outcome {
    bool pass = true;
    long checks = 0;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        } else if (!ok) {
            pass = false;
        }
    }
};

const std::vector<Rational> kBases = {Rational(-3), Rational(-2), Rational(2), Rational(3)};

Rational alt(long e, const Rational& v) { return e % 2 == 0 ? v : Rational(-v); }

std::vector<SchemeParams> all_kinds(long q, long n_max) {
    std::vector<SchemeParams> out;
    for (long n = 1; n <= n_max; ++n) {
        out.push_back(make_hamming(q, n));
        out.push_back(make_bilinear(q, n, n));
        out.push_back(make_bilinear(q, n + 1, n));
        out.push_back(make_gabidulin(q, n, n));
        out.push_back(make_gabidulin(q, n + 2, n));
        out.push_back(make_hermitian(q, n));
    }
    for (long t = 2; t <= 2 * n_max + 1; ++t) out.push_back(make_skew(q, t));
    return out;
}

// Criterion 5 parameter sets, all over F_2.
std::vector<SchemeParams> char2_schemes() {
    std::vector<SchemeParams> out;
    for (long n = 1; n <= 6; ++n) out.push_back(make_hamming(2, n));
    out.push_back(make_bilinear(2, 2, 2));
    out.push_back(make_bilinear(2, 3, 2));
    out.push_back(make_gabidulin(2, 2, 2));
    out.push_back(make_skew(2, 4));
    out.push_back(make_hermitian(2, 2));
    out.push_back(make_hermitian(2, 3));
    return out;
}

struct CodePair {
    SchemeParams params;
    WeightDistribution dist;
    WeightDistribution dual;
    BigInt size;
    BigInt dual_size;
};

std::vector<CodePair>& code_pairs() {
    static std::vector<CodePair> pairs;
    return pairs;
}

// --- 1 ---------------------------------------------------------------------
Outcome eigenvalue_forms() {
    Outcome o;
    for (long q : {2L, 3L}) {
        for (const SchemeParams& p : all_kinds(q, 5)) {
            for (long k = 0; k <= p.n; ++k)
                for (long x = 0; x <= p.n; ++x)
                    o.expect(c_poly(k, x, p) == delsarte_p(k, x, p),
                             p.describe() + " k=" + std::to_string(k) + " x=" + std::to_string(x));
        }
    }
    return o;
}

// --- 2 ---------------------------------------------------------------------
Outcome skew_values() {
    Outcome o;
    const long expected[] = {3, 17, 99};
    const long qs[] = {2, 3, 5};
    std::ostringstream got;
    for (int i = 0; i < 3; ++i) {
        const Rational v = c_poly(1, 1, make_skew(qs[i], 4));
        got << (i ? "," : "") << to_string(v);
        o.expect(v == expected[i], "q=" + std::to_string(qs[i]) + " gave " + to_string(v));
    }
    if (o.pass) o.detail = "{" + got.str() + "}";
    return o;
}

// --- 3 ---------------------------------------------------------------------
Outcome recurrences() {
    Outcome o;
    for (long q : {2L, 3L}) {
        for (const SchemeParams& p : {make_hamming(q, 1), make_bilinear(q, 1, 1), make_bilinear(q, 2, 1),
                                      make_bilinear(q, 3, 1), make_skew(q, 2), make_skew(q, 3), make_hermitian(q, 1)}) {
            o.expect(check_recurrence(p, 6).empty(), "recurrence fails for the family of " + p.describe());
        }
        o.expect(hermitian_recurrence_equiv(q, 5).empty(), "Hermitian recurrences differ at q=" + std::to_string(q));
    }
    return o;
}

// --- 4 ---------------------------------------------------------------------
Outcome eigenmatrix_structure() {
    Outcome o;
    for (long q : {2L, 3L}) {
        for (const SchemeParams& p : all_kinds(q, 4)) {
            const Eigenmatrix e(p);
            const auto xis = xi_vector(p);
            for (long i = 0; i <= p.n; ++i) {
                o.expect(e(0, i) == Rational(xis[i]), p.describe() + ": row 0 differs from xi");
                o.expect(e(i, 0) == 1, p.describe() + ": column 0 not all ones");
            }
            o.expect(e.is_scaled_involution(), p.describe() + ": P*P != |X| I");
            o.expect(e.is_orthogonal(), p.describe() + ": orthogonality fails");
        }
    }
    return o;
}

// --- 5 ---------------------------------------------------------------------
Outcome character_sums() {
    Outcome o;
    for (const SchemeParams& p : char2_schemes()) {
        const AmbientSpace s(p);
        const auto table = char_eigenmatrix(s);
        for (long x = 0; x <= p.n; ++x)
            for (long k = 0; k <= p.n; ++k)
                o.expect(Rational(table[x][k]) == c_poly(k, x, p),
                         p.describe() + " k=" + std::to_string(k) + " x=" + std::to_string(x));
    }
    return o;
}

// --- 6 ---------------------------------------------------------------------
Outcome oracle_equivalence() {
    Outcome o;
    std::vector<SchemeParams> schemes = char2_schemes();
    for (long n = 1; n <= 6; ++n) schemes.push_back(make_hamming(3, n));
    constexpr int kTrials = 20;
    std::mt19937_64 rng(20261018);
    for (const SchemeParams& p : schemes) {
        const AmbientSpace s(p);
        const Eigenmatrix eigen(p);
        for (int t = 0; t < kTrials; ++t) {
            const CodeSpec c = random_code(s, rng());
            const CodeSpec d = dual_code(s, c);
            CodePair pair{p, weight_distribution(s, c), weight_distribution(s, d), code_size(s, c), code_size(s, d)};
            const TransformInput in{pair.dist, pair.size, p};
            const WeightDistribution e = transform_eigen(in, eigen);
            const WeightDistribution f = transform_functional(in);
            o.expect(e == pair.dual && f == pair.dual, p.describe() + ": transform differs from brute-force dual");
            code_pairs().push_back(std::move(pair));
        }
    }
    o.detail = std::to_string(code_pairs().size()) + " codes";
    return o;
}

// --- 7 ---------------------------------------------------------------------
SchemeElement word(std::vector<Elem> e) {
    return SchemeElement{SchemeKind::Hamming, 1, static_cast<long>(e.size()), std::move(e)};
}

Outcome named_codes() {
    Outcome o;
    const AmbientSpace h7(make_hamming(2, 7));
    const CodeSpec hamming{h7.params(),
                           {word({1, 0, 0, 0, 1, 1, 0}), word({0, 1, 0, 0, 1, 0, 1}), word({0, 0, 1, 0, 0, 1, 1}),
                            word({0, 0, 0, 1, 1, 1, 1})}};
    const WeightDistribution hd = weight_distribution(h7, hamming);
    const WeightDistribution sd = weight_distribution(h7, dual_code(h7, hamming));
    o.expect(hd == make_distribution({1, 0, 0, 7, 7, 0, 0, 1}), "[7,4] distribution");
    o.expect(sd == make_distribution({1, 0, 0, 0, 7, 0, 0, 0}), "simplex distribution");
    o.expect(transform_eigen({hd, 16, h7.params()}) == sd, "[7,4] -> simplex (eigen)");
    o.expect(transform_functional({hd, 16, h7.params()}) == sd, "[7,4] -> simplex (functional)");
    o.expect(transform_functional({sd, 8, h7.params()}) == hd, "simplex -> [7,4]");
    for (long n = 3; n <= 7; ++n) {
        const AmbientSpace s(make_hamming(2, n));
        const CodeSpec rep{s.params(), {word(std::vector<Elem>(static_cast<std::size_t>(n), 1))}};
        WeightDistribution even;
        for (long w = 0; w <= n; ++w) even.counts.push_back(w % 2 == 0 ? xi(s.params(), w) : BigInt(0));
        WeightDistribution repd;
        repd.counts.assign(static_cast<std::size_t>(n + 1), BigInt(0));
        repd.counts[0] = repd.counts[n] = 1;
        o.expect(weight_distribution(s, rep) == repd, "repetition distribution n=" + std::to_string(n));
        o.expect(weight_distribution(s, dual_code(s, rep)) == even, "even-weight dual n=" + std::to_string(n));
        o.expect(transform_eigen({repd, 2, s.params()}) == even, "repetition transform n=" + std::to_string(n));
        o.expect(transform_functional({repd, 2, s.params()}) == even, "repetition transform n=" + std::to_string(n));
    }
    return o;
}

// --- 8 ---------------------------------------------------------------------
Outcome moment_identities() {
    Outcome o;
    long corollary = 0;
    long alternating = 0;
    for (const CodePair& c : code_pairs()) {
        const SchemeParams& p = c.params;
        const long dual_distance = c.dual.minimum_distance();
        for (long phi = 0; phi <= p.n; ++phi) {
            const MomentPair mb = moment_b(p, c.dist, c.dual, c.dual_size, phi);
            const MomentPair mi = moment_binv(p, c.dist, c.dual, c.dual_size, phi);
            o.expect(mb.balanced(), p.describe() + ": b-moment unbalanced at phi=" + std::to_string(phi));
            o.expect(mi.balanced(), p.describe() + ": b^-1-moment unbalanced at phi=" + std::to_string(phi));
            if (phi < dual_distance) {
                ++corollary;
                o.expect(mb.rhs == moment_b_below_dual_distance(p, c.dual_size, phi), "b corollary");
                o.expect(mi.rhs == moment_binv_below_dual_distance(p, c.dual_size, phi), "b^-1 corollary");
            }
        }
        if (p.kind == SchemeKind::Hamming && c.dual.diameter() < p.n) {
            ++alternating;
            Rational sum = 0;
            for (long i = 0; i <= p.n; ++i) sum += alt(i, pow(Rational(p.q - 1), p.n - i) * Rational(c.dist.counts[i]));
            o.expect(sum == 0, p.describe() + ": alternating sum nonzero");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(code_pairs().size()) + " code pairs, " + std::to_string(corollary) +
                   " corollary cases, " + std::to_string(alternating) + " alternating-sum cases";
    }
    return o;
}

// --- 9 ---------------------------------------------------------------------
constexpr int kInstances = 200;

Rational random_small(std::mt19937_64& rng) {
    return make_rational(std::uniform_int_distribution<long>(-9, 9)(rng),
                         std::uniform_int_distribution<long>(1, 5)(rng));
}

HomPoly random_poly(std::mt19937_64& rng, long r, const Rational& b, const Rational& c) {
    auto a = std::make_shared<std::vector<long>>();
    auto e = std::make_shared<std::vector<int>>();
    const bool depends = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    for (long u = 0; u <= r; ++u) {
        a->push_back(std::uniform_int_distribution<long>(-3, 3)(rng));
        e->push_back(depends ? std::uniform_int_distribution<int>(0, 2)(rng) : 0);
    }
    return HomPoly(r, [a, e, b, c](long u, long lambda) -> Rational {
        return Rational((*a)[u]) * pow(c * pow(b, lambda), (*e)[u]);
    });
}

HomPoly sum_of(const std::vector<HomPoly>& terms) {
    HomPoly acc;
    for (const HomPoly& t : terms) acc = acc + t;
    return acc;
}

Rational prod_y(const Rational& y, long x, const Rational& b) {
    Rational p = 1;
    for (long i = 0; i < x; ++i) p *= y - pow(b, i);
    return p;
}

bool combinatorics_instance(std::mt19937_64& rng, const Rational& b) {
    const long x = std::uniform_int_distribution<long>(0, 8)(rng);
    const long k = std::uniform_int_distribution<long>(0, x)(rng);
    const long i = std::uniform_int_distribution<long>(0, x - k)(rng);
    const Rational y = random_small(rng);
    Rational c = random_small(rng);
    if (c == 0) c = 1;
    bool ok = gauss(x, k, b) == gauss(x, x - k, b);
    ok = ok && gauss(x, i, b) * gauss(x - i, k, b) == gauss(x, k, b) * gauss(x - k, i, b);
    Rational expand = 0;
    Rational to_power = 0;
    for (long j = 0; j <= x; ++j) {
        expand += alt(x - j, pow(b, sigma(x - j)) * gauss(x, j, b) * pow(y, j));
        to_power += gauss(x, j, b) * prod_y(y, j, b);
    }
    ok = ok && expand == prod_y(y, x, b) && to_power == pow(y, x);
    Rational delta = 0;
    for (long m = k; m <= x; ++m) delta += alt(m - k, pow(b, sigma(m - k)) * gauss(m, k, b) * gauss(x, m, b));
    ok = ok && delta == (x == k ? 1 : 0);
    if (x >= 1 && k >= 1) {
        ok = ok && gauss(x, k, b) == gauss(x - 1, k - 1, b) + pow(b, k) * gauss(x - 1, k, b);
        ok = ok && gauss(x, k, b) == pow(b, x - k) * gauss(x - 1, k - 1, b) + gauss(x - 1, k, b);
        ok = ok && gauss(x, k, b) * (pow(b, k) - 1) == (pow(b, x) - 1) * gauss(x - 1, k - 1, b);
        ok = ok && gauss(x, k - 1, b) * (pow(b, x - k + 1) - 1) == (pow(b, k) - 1) * gauss(x, k, b);
        ok = ok && gauss(x, k, b) * (pow(b, x - k) - 1) == (pow(b, x) - 1) * gauss(x - 1, k, b);
    }
    ok = ok && beta(x, k, b) == gauss(x, k, b) * beta(k, k, b);
    ok = ok && beta(x, x, b) == gauss(x, k, b) * beta(k, k, b) * beta(x - k, x - k, b);
    ok = ok && beta(x, k, b) * beta(x - k, 1, b) == beta(x, k + 1, b);
    Rational g = 1;
    for (long m = 0; m < k; ++m) g *= c * pow(b, x - m) - 1;
    ok = ok && gamma(x, k, b, c) == pow(b, sigma(k)) * g;
    ok = ok && gamma(x + 1, k + 1, b, c) == (c * pow(b, x + 1) - 1) * pow(b, k) * gamma(x, k, b, c);
    ok = ok && gamma(x, k + 1, b, c) == (c * pow(b, x) - pow(b, k)) * gamma(x, k, b, c);
    return ok;
}

Outcome algebra_properties() {
    Outcome o;
    const std::vector<long> lambdas = {-2, -1, 0, 1, 2, 3, 4, 5, 6};
    std::mt19937_64 rng(9);
    auto deg = [&](long hi) { return std::uniform_int_distribution<long>(0, hi)(rng); };
    for (const Rational& b : kBases) {
        const std::string at = " at b=" + to_string(b);
        for (int t = 0; t < kInstances; ++t) {
            const Rational c = random_small(rng) + 3;
            const long r = deg(5);
            const long s = deg(5);
            const long phi = deg(4);
            const HomPoly f = random_poly(rng, r, b, c);
            const HomPoly g = random_poly(rng, s, b, c);
            std::vector<HomPoly> lb;
            std::vector<HomPoly> li;
            for (long l = 0; l <= phi; ++l) {
                if (l > r || phi - l > s) continue;
                lb.push_back(b_product(b_derivative(f, l, b), b_derivative(g, phi - l, b), b)
                                 .scaled(gauss(phi, l, b) * pow(b, (phi - l) * (r - l))));
                li.push_back(b_product(binv_derivative(f, l, b), binv_derivative(g, phi - l, b).shifted(l), b)
                                 .scaled(gauss(phi, l, b) * pow(b, l * (s - phi + l))));
            }
            o.expect(equal_on(b_derivative(b_product(f, g, b), phi, b), sum_of(lb), lambdas), "Leibniz (b)" + at);
            o.expect(equal_on(binv_derivative(b_product(f, g, b), phi, b), sum_of(li), lambdas),
                     "Leibniz (b^-1)" + at);
        }
        for (int t = 0; t < kInstances; ++t) {
            Rational c = random_small(rng);
            if (c == 0) c = 2;
            const long k = deg(6);
            const long phi = std::uniform_int_distribution<long>(0, k)(rng);
            const Rational bk = beta(k, phi, b);
            o.expect(equal_on(b_derivative(mu_family(k, b, c), phi, b), mu_family(k - phi, b, c).scaled(bk), lambdas),
                     "mu b-derivative" + at);
            o.expect(equal_on(b_derivative(nu_family(k, b), phi, b), nu_family(k - phi, b).scaled(bk), lambdas),
                     "nu b-derivative" + at);
            o.expect(equal_on(binv_derivative(nu_family(k, b), phi, b),
                              nu_family(k - phi, b).scaled(alt(phi, bk)), lambdas),
                     "nu b^-1-derivative" + at);
            const HomPoly lower = mu_family(k - phi, b, c).shifted(phi);
            const HomPoly expected(k - phi, [=](long u, long lambda) -> Rational {
                return pow(b, -sigma(phi)) * bk * gamma(lambda, phi, b, c) * lower.coeff(u, lambda);
            });
            o.expect(equal_on(binv_derivative(mu_family(k, b, c), phi, b), expected, lambdas),
                     "mu b^-1-derivative" + at);
        }
        for (int t = 0; t < kInstances; ++t) {
            const long j = deg(6);
            const long l = std::uniform_int_distribution<long>(0, j)(rng);
            const long lambda = deg(8) - 2;
            o.expect(evaluate(b_derivative(nu_family(j, b), l, b), 1, 1, lambda) == (l == j ? beta(j, j, b) : Rational(0)),
                     "nu evaluation lemma" + at);
            const Rational c = random_small(rng) + 3;
            const long sdeg = deg(4);
            const HomPoly rho = random_poly(rng, deg(4), b, c);
            o.expect(evaluate(b_product(rho, mu_family(sdeg, b, c), b), 1, 1, lambda) ==
                         pow(c * pow(b, lambda), sdeg) * evaluate(rho, 1, 1, lambda),
                     "rho*mu evaluation lemma" + at);
        }
        for (int t = 0; t < kInstances; ++t) {
            Rational c = random_small(rng);
            if (c == 0) c = 1;
            const long lambda = deg(8);
            const long phi = deg(5);
            const long j = deg(5);
            o.expect(lemma::delta_sum(lambda, phi, j, b, c) == lemma::delta_closed(lambda, phi, j, b, c),
                     "delta lemma" + at);
            const long big = deg(8);
            const long i = deg(5);
            o.expect(lemma::epsilon_sum(big, phi, i, b) == lemma::epsilon_closed(big, phi, i, b), "epsilon lemma" + at);
            o.expect(combinatorics_instance(rng, b), "b-combinatorics identities" + at);
        }
    }
    if (o.pass) o.detail = std::to_string(kInstances) + " instances per property per b";
    return o;
}

// --- 10 --------------------------------------------------------------------
Outcome maximal_codes() {
    Outcome o;
    const AmbientSpace ternary(make_hamming(3, 4));
    const CodeSpec tetracode{ternary.params(), {word({1, 0, 1, 1}), word({0, 1, 1, 2})}};
    const WeightDistribution tetra = weight_distribution(ternary, tetracode);
    o.expect(tetra == make_distribution({1, 0, 0, 8, 0}), "tetracode brute force");
    o.expect(maximal_distribution(ternary.params(), 3, 9) == tetra, "tetracode formula");

    const AmbientSpace gab(make_gabidulin(2, 2, 2));
    const CodeSpec mrd{gab.params(), {SchemeElement{SchemeKind::Gabidulin, 1, 2, {1, 2}}}};
    const WeightDistribution md = weight_distribution(gab, mrd);
    o.expect(md == make_distribution({1, 0, 3}), "MRD brute force");
    o.expect(maximal_distribution(gab.params(), 2, 4) == md, "MRD formula");

    std::mt19937_64 rng(10);
    for (int t = 0; t < 100; ++t) {
        const Rational& b = kBases[static_cast<std::size_t>(t) % kBases.size()];
        const long l = std::uniform_int_distribution<long>(0, 6)(rng);
        std::vector<Rational> y;
        for (long i = 0; i <= l; ++i) y.emplace_back(std::uniform_int_distribution<long>(-100, 100)(rng));
        o.expect(invert_triangular(forward_triangular(y, b), b) == y, "triangular round trip");
    }
    return o;
}

// --- 11 --------------------------------------------------------------------
Outcome scheme_axioms() {
    Outcome o;
    for (const SchemeParams& p : {make_hamming(2, 3), make_bilinear(2, 2, 2), make_hermitian(2, 2), make_skew(2, 4)}) {
        const AxiomReport r = verify_scheme_axioms(AmbientSpace(p));
        o.expect(r.passed(), p.describe() + ": " + (r.violations.empty() ? "" : r.violations.front()));
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "eigenvalue form equality", 5, eigenvalue_forms},
        {2, "skew C_1(1) values at t = 4", 1, skew_values},
        {3, "recurrence suites", 5, recurrences},
        {4, "eigenmatrix structure", 5, eigenmatrix_structure},
        {5, "character-sum eigenvalues", 60, character_sums},
        {6, "MacWilliams oracle equivalence", 60, oracle_equivalence},
        {7, "named codes", 1, named_codes},
        {8, "moment identities", 30, moment_identities},
        {9, "algebra property suite", 30, algebra_properties},
        {10, "maximal codes and triangular inversion", 5, maximal_codes},
        {11, "scheme axioms", 30, scheme_axioms},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("[%s] %2d %-40s %7ld checks  %6.2fs (budget %gs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.checks, secs, c.budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
        if (secs > c.budget_s) std::printf("       note: criterion %d ran over its expected runtime\n", c.id);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
