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

#include "kscheme/krawtchouk.hpp"

#include "kscheme/combinatorics.hpp"

#include <string>

namespace kscheme {

namespace {

void check_range(long k, long x, long n) {
    if (n < 0 || k < 0 || x < 0 || k > n || x > n) {
        throw InvalidInput("Krawtchouk index out of range: k=" + std::to_string(k) + ", x=" + std::to_string(x) +
                           ", n=" + std::to_string(n));
    }
}

}  // namespace

Rational c_poly(long k, long x, long n, const Rational& b, const Rational& c) {
    check_range(k, x, n);
    Rational sum = 0;
    for (long j = 0; j <= k && j <= x; ++j) {
        Rational term = pow(b, j * (n - x) + sigma(j)) * gauss(x, j, b) * gauss(n - x, k - j, b) *
                        gamma(n - j, k - j, b, c);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational c_poly(long k, long x, const SchemeParams& params) { return c_poly(k, x, params.n, params.b, params.c); }

Rational delsarte_p(long k, long x, long n, const Rational& b, const Rational& c) {
    check_range(k, x, n);
    const Rational cbn = c * pow(b, n);
    Rational sum = 0;
    for (long j = 0; j <= k; ++j) {
        Rational term = pow(cbn, j) * pow(b, sigma(k - j)) * gauss(n - j, n - k, b) * gauss(n - x, j, b);
        if ((k - j) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational delsarte_p(long k, long x, const SchemeParams& params) {
    return delsarte_p(k, x, params.n, params.b, params.c);
}

Eigenmatrix::Eigenmatrix(const SchemeParams& params)
    : params_(params), dim_(params.n + 1), entries_(static_cast<std::size_t>(dim_ * dim_)) {
    for (long i = 0; i < dim_; ++i) {
        for (long k = 0; k < dim_; ++k) {
            Rational value = c_poly(k, i, params_);
            if (value != delsarte_p(k, i, params_)) {
                throw IdentityViolation("eigenmatrix cross-check failed at (i=" + std::to_string(i) +
                                        ", k=" + std::to_string(k) + ") for " + params_.describe());
            }
            entries_[index(i, k)] = std::move(value);
        }
    }
}

std::vector<Rational> Eigenmatrix::valencies() const {
    return {entries_.begin(), entries_.begin() + dim_};
}

bool Eigenmatrix::is_scaled_involution() const {
    const Rational scale(params_.space_size);
    for (long i = 0; i < dim_; ++i) {
        for (long k = 0; k < dim_; ++k) {
            Rational sum = 0;
            for (long j = 0; j < dim_; ++j) sum += (*this)(i, j) * (*this)(j, k);
            if (sum != (i == k ? scale : Rational(0))) return false;
        }
    }
    return true;
}

bool Eigenmatrix::is_orthogonal() const {
    const Rational size(params_.space_size);
    const auto v = valencies();
    for (long k = 0; k < dim_; ++k) {
        for (long l = 0; l < dim_; ++l) {
            Rational sum = 0;
            for (long i = 0; i < dim_; ++i) sum += v[i] * (*this)(i, k) * (*this)(i, l);
            if (sum != (k == l ? size * v[k] : Rational(0))) return false;
        }
    }
    return true;
}

std::vector<RecurrenceViolation> check_recurrence(const Rational& b, const Rational& c, long maxN) {
    if (maxN < 1) throw InvalidInput("check_recurrence: maxN must be at least 1");
    std::vector<RecurrenceViolation> violations;
    for (long n = 0; n < maxN; ++n) {
        for (long k = 0; k <= n; ++k) {
            // C_{k+1}(., n) vanishes identically once k+1 > n.
            for (long x = 0; x <= n; ++x) {
                const Rational lhs = c_poly(k + 1, x + 1, n + 1, b, c);
                const Rational upper = (k + 1 <= n) ? c_poly(k + 1, x, n, b, c) : Rational(0);
                const Rational rhs = pow(b, k + 1) * upper - pow(b, k) * c_poly(k, x, n, b, c);
                if (lhs != rhs) violations.push_back({k, x, n});
            }
        }
    }
    return violations;
}

std::vector<RecurrenceViolation> check_recurrence(const SchemeParams& params, long maxN) {
    return check_recurrence(params.b, params.c, maxN);
}

}  // namespace kscheme
