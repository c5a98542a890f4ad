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

#include "kscheme/oracle/field.hpp"

#include "kscheme/rational.hpp"

#include <string>

namespace kscheme::oracle {

namespace {

using Poly = std::vector<int>;  // coefficients, lowest degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly digits(int value, int p, int k) {
    Poly d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        d[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return d;
}

int encode(const Poly& d, int p) {
    int value = 0;
    for (std::size_t i = d.size(); i-- > 0;) value = value * p + d[i];
    return value;
}

// Monic polynomial of degree `deg` whose lower coefficients are the digits of `code`.
Poly monic(int code, int p, int deg) {
    Poly m = digits(code, p, deg);
    m.push_back(1);
    return m;
}

bool is_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            if (poly_mod(f, monic(code, p, d), p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(int order) : order_(order), p_(0), k_(0) {
    if (order < 2 || order > 16) {
        throw InvalidInput("finite field order " + std::to_string(order) + " outside the supported range 2..16");
    }
    int p = 2;
    while (order % p != 0) ++p;
    int k = 0;
    int rest = order;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw InvalidInput("finite field order " + std::to_string(order) + " is not a prime power");
    p_ = p;
    k_ = k;

    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
        Poly candidate = monic(code, p, k);
        if (is_irreducible(candidate, p)) {
            modulus_ = std::move(candidate);
            break;
        }
    }

    const auto n = static_cast<std::size_t>(order);
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    for (int a = 0; a < order; ++a) {
        const Poly da = digits(a, p, k);
        Poly na(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) na[i] = (p - da[i]) % p;
        neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(encode(na, p));
        for (int b = 0; b < order; ++b) {
            const Poly db = digits(b, p, k);
            Poly sum(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) sum[i] = (da[i] + db[i]) % p;
            add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(encode(sum, p));

            Poly prod(static_cast<std::size_t>(2 * k), 0);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] += da[i] * db[j];
            }
            for (auto& c : prod) c %= p;
            Poly reduced = poly_mod(prod, modulus_, p);
            reduced.resize(static_cast<std::size_t>(k), 0);
            mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = static_cast<Elem>(encode(reduced, p));
        }
    }
    for (int a = 1; a < order; ++a) {
        for (int b = 1; b < order; ++b) {
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
        }
    }

    // Axiom spot checks: every nonzero element is invertible, multiplication
    // is associative and distributes over addition.
    for (int a = 1; a < order; ++a) {
        if (inv_[static_cast<std::size_t>(a)] == 0) throw IdentityViolation("finite field: element without inverse");
    }
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            for (int c = 0; c < order; c += 3) {
                const auto ea = static_cast<Elem>(a);
                const auto eb = static_cast<Elem>(b);
                const auto ec = static_cast<Elem>(c);
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec)) ||
                    mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) {
                    throw IdentityViolation("finite field: table axioms violated");
                }
            }
        }
    }
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw InvalidInput("finite field: inverse of zero");
    return inv_[a];
}

Elem FiniteField::pow(Elem a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem FiniteField::frobenius(Elem a, int r) const {
    Elem out = a;
    for (int i = 0; i < r; ++i) out = pow(out, p_);
    return out;
}

Elem FiniteField::absolute_trace(Elem a) const {
    Elem sum = 0;
    Elem conj = a;
    for (int i = 0; i < k_; ++i) {
        sum = add(sum, conj);
        conj = pow(conj, p_);
    }
    return sum;
}

}  // namespace kscheme::oracle
