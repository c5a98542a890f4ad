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

#include "kscheme/schemes.hpp"

#include "kscheme/combinatorics.hpp"
#include "kscheme/krawtchouk.hpp"

#include <string>

namespace kscheme {

std::string_view kind_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Hamming: return "hamming";
        case SchemeKind::Bilinear: return "bilinear";
        case SchemeKind::Gabidulin: return "gabidulin";
        case SchemeKind::Skew: return "skew";
        case SchemeKind::Hermitian: return "hermitian";
    }
    return "unknown";
}

SchemeKind parse_kind(std::string_view name) {
    for (auto kind : {SchemeKind::Hamming, SchemeKind::Bilinear, SchemeKind::Gabidulin, SchemeKind::Skew,
                      SchemeKind::Hermitian}) {
        if (kind_name(kind) == name) return kind;
    }
    throw InvalidInput("unknown scheme kind '" + std::string(name) + "'");
}

std::string SchemeParams::describe() const {
    std::string out(kind_name(kind));
    out += " q=" + std::to_string(q);
    switch (kind) {
        case SchemeKind::Hamming: out += " n=" + std::to_string(n); break;
        case SchemeKind::Bilinear:
        case SchemeKind::Gabidulin: out += " m=" + std::to_string(m) + " n=" + std::to_string(n); break;
        case SchemeKind::Skew:
        case SchemeKind::Hermitian: out += " t=" + std::to_string(m); break;
    }
    return out;
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

namespace {

BigInt int_pow(long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

SchemeParams finish(SchemeParams p) {
    // |X| = (c b^n)^n is the structural invariant tying (b, c, n) to the space.
    if (pow(p.cbn(), p.n) != Rational(p.space_size)) {
        throw IdentityViolation("scheme parameters inconsistent with space size for " + p.describe());
    }
    return p;
}

}  // namespace

SchemeParams make_hamming(long q, long n) {
    require(q >= 2, "hamming: q must be at least 2");
    require(n >= 1, "hamming: n must be at least 1");
    SchemeParams p;
    p.kind = SchemeKind::Hamming;
    p.q = q;
    p.m = 0;
    p.n = n;
    p.b = 1;
    p.c = q;
    p.space_size = int_pow(q, static_cast<unsigned long>(n));
    return finish(p);
}

namespace {

SchemeParams make_rank(SchemeKind kind, long q, long m, long n) {
    require(q >= 2, "rank scheme: q must be at least 2");
    require(n >= 1, "rank scheme: n must be at least 1");
    require(m >= n, "rank scheme: requires m >= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    SchemeParams p;
    p.kind = kind;
    p.q = q;
    p.m = m;
    p.n = n;
    p.b = q;
    p.c = pow(Rational(q), m - n);
    p.space_size = int_pow(q, static_cast<unsigned long>(m * n));
    return finish(p);
}

}  // namespace

SchemeParams make_bilinear(long q, long m, long n) { return make_rank(SchemeKind::Bilinear, q, m, n); }

SchemeParams make_gabidulin(long q, long m, long n) { return make_rank(SchemeKind::Gabidulin, q, m, n); }

SchemeParams make_skew(long q, long t) {
    require(q >= 2, "skew: q must be at least 2");
    require(t >= 2, "skew: t must be at least 2 so that there is at least one class");
    SchemeParams p;
    p.kind = SchemeKind::Skew;
    p.q = q;
    p.m = t;
    p.n = t / 2;
    p.b = q * q;
    p.c = (t % 2 == 1) ? Rational(q) : make_rational(1, q);
    p.space_size = int_pow(q, static_cast<unsigned long>(t * (t - 1) / 2));
    return finish(p);
}

SchemeParams make_hermitian(long q, long t) {
    require(q >= 2, "hermitian: q must be at least 2");
    require(t >= 1, "hermitian: t must be at least 1");
    SchemeParams p;
    p.kind = SchemeKind::Hermitian;
    p.q = q;
    p.m = t;
    p.n = t;
    p.b = -q;
    p.c = -1;
    p.space_size = int_pow(q, static_cast<unsigned long>(t * t));
    return finish(p);
}

SchemeParams make_scheme(SchemeKind kind, long q, std::span<const long> dims, bool require_prime_power) {
    if (require_prime_power) require(is_prime_power(q), "q=" + std::to_string(q) + " is not a prime power");
    const std::size_t expected = (kind == SchemeKind::Bilinear || kind == SchemeKind::Gabidulin) ? 2 : 1;
    require(dims.size() == expected, std::string(kind_name(kind)) + ": expected " + std::to_string(expected) +
                                         " dimension value(s), got " + std::to_string(dims.size()));
    switch (kind) {
        case SchemeKind::Hamming: return make_hamming(q, dims[0]);
        case SchemeKind::Bilinear: return make_bilinear(q, dims[0], dims[1]);
        case SchemeKind::Gabidulin: return make_gabidulin(q, dims[0], dims[1]);
        case SchemeKind::Skew: return make_skew(q, dims[0]);
        case SchemeKind::Hermitian: return make_hermitian(q, dims[0]);
    }
    throw InvalidInput("unknown scheme kind");
}

BigInt xi(const SchemeParams& params, long omega) {
    if (omega < 0 || omega > params.n) throw InvalidInput("xi: weight out of range");
    const Rational value = gauss(params.n, omega, params.b) * gamma(params.n, omega, params.b, params.c);
    BigInt count = to_integer(value, "xi");
    if (count < 0) throw IdentityViolation("xi: negative element count for " + params.describe());
    return count;
}

std::vector<BigInt> xi_vector(const SchemeParams& params) {
    std::vector<BigInt> out;
    for (long w = 0; w <= params.n; ++w) out.push_back(xi(params, w));
    return out;
}

HomPoly omega_enumerator(const SchemeParams& params) {
    std::vector<Rational> coeffs;
    for (const auto& v : xi_vector(params)) coeffs.emplace_back(v);
    const HomPoly closed = mu_family(params.n, params.b, params.c);
    for (long u = 0; u <= params.n; ++u) {
        if (closed.coeff(u, params.n) != coeffs[static_cast<std::size_t>(u)]) {
            throw IdentityViolation("omega_enumerator: mu^[n](X,Y;n) disagrees with xi at u=" + std::to_string(u));
        }
    }
    return HomPoly::constant(std::move(coeffs));
}

std::vector<HermitianRecurrenceViolation> hermitian_recurrence_equiv(long q, long tMax) {
    if (tMax < 2) throw InvalidInput("hermitian_recurrence_equiv: tMax must be at least 2");
    const Rational b(-q);
    const Rational c(-1);
    auto eig = [&](long k, long x, long t) -> Rational { return k > t ? Rational(0) : c_poly(k, x, t, b, c); };

    std::vector<HermitianRecurrenceViolation> out;
    for (long t = 0; t < tMax; ++t) {
        for (long k = 0; k <= t; ++k) {
            for (long x = 0; x <= t; ++x) {
                const Rational lhs = eig(k + 1, x + 1, t + 1);
                const Rational schmidt = eig(k + 1, x, t + 1) + pow(b, 2 * t + 1 - x) * eig(k, x, t);
                const Rational delsarte = pow(b, k + 1) * eig(k + 1, x, t) - pow(b, k) * eig(k, x, t);
                const bool bad_schmidt = lhs != schmidt;
                const bool bad_delsarte = lhs != delsarte;
                if (bad_schmidt || bad_delsarte) out.push_back({k, x, t, bad_schmidt, bad_delsarte});
            }
        }
    }
    return out;
}

}  // namespace kscheme
