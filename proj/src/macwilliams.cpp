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

#include "kscheme/macwilliams.hpp"

#include "kscheme/combinatorics.hpp"
#include "kscheme/hompoly.hpp"

#include <exception>
#include <string>

namespace kscheme {

BigInt WeightDistribution::total() const {
    BigInt sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

long WeightDistribution::minimum_distance() const {
    for (long i = 1; i <= n(); ++i) {
        if (counts[static_cast<std::size_t>(i)] != 0) return i;
    }
    return n() + 1;
}

long WeightDistribution::diameter() const {
    for (long i = n(); i > 0; --i) {
        if (counts[static_cast<std::size_t>(i)] != 0) return i;
    }
    return 0;
}

WeightDistribution make_distribution(std::initializer_list<long> counts) {
    WeightDistribution d;
    for (long c : counts) d.counts.emplace_back(c);
    return d;
}

void TransformInput::validate() const {
    if (dist.n() != params.n) {
        throw InvalidInput("weight distribution has " + std::to_string(dist.counts.size()) + " entries, expected " +
                           std::to_string(params.n + 1));
    }
    for (const auto& c : dist.counts) {
        if (c < 0) throw InvalidInput("weight distribution has a negative entry");
    }
    if (dist.counts[0] < 1) throw InvalidInput("weight distribution must count the zero word (c_0 >= 1)");
    if (code_size <= 0) throw InvalidInput("code size must be positive");
    if (dist.total() != code_size) {
        throw InvalidInput("weights sum to " + to_string(dist.total()) + " but code size is " + to_string(code_size));
    }
    if (params.space_size % code_size != 0) {
        throw InvalidInput("code size " + to_string(code_size) + " does not divide |X| = " + to_string(params.space_size));
    }
}

BigInt TransformInput::dual_size() const { return params.space_size / code_size; }

namespace {

WeightDistribution to_distribution(const std::vector<Rational>& values, const char* what) {
    WeightDistribution out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!is_integer(values[k]) || values[k] < 0) {
            throw IdentityViolation(std::string(what) + ": entry " + std::to_string(k) + " of the dual distribution is " +
                                    to_string(values[k]) + "; the input is not the distribution of a linear code");
        }
        out.counts.push_back(values[k].get_num());
    }
    return out;
}

}  // namespace

WeightDistribution transform_eigen(const TransformInput& in) { return transform_eigen(in, Eigenmatrix(in.params)); }

WeightDistribution transform_eigen(const TransformInput& in, const Eigenmatrix& eigen) {
    in.validate();
    if (eigen.params() != in.params) throw InvalidInput("eigenmatrix belongs to a different scheme");
    const long n = in.params.n;
    const Rational size(in.code_size);
    std::vector<Rational> out(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n; ++i) sum += Rational(in.dist.counts[static_cast<std::size_t>(i)]) * eigen(i, k);
        out[static_cast<std::size_t>(k)] = sum / size;
    }
    return to_distribution(out, "transform_eigen");
}

WeightDistribution transform_functional(const TransformInput& in) {
    in.validate();
    const long n = in.params.n;
    const Rational& b = in.params.b;
    const Rational& c = in.params.c;

    HomPoly enumerator(n, [](long, long) -> Rational { return Rational(0); });
    for (long i = 0; i <= n; ++i) {
        const BigInt& ci = in.dist.counts[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        HomPoly term = b_product(nu_family(i, b), mu_family(n - i, b, c), b);
        enumerator = enumerator + term.scaled(Rational(ci));
    }
    std::vector<Rational> out = enumerator.coefficients(n);
    const Rational size(in.code_size);
    for (auto& v : out) v /= size;
    return to_distribution(out, "transform_functional");
}

namespace {

WeightDistribution transform_one(const TransformInput& in, TransformMethod method) {
    return method == TransformMethod::Eigen ? transform_eigen(in) : transform_functional(in);
}

}  // namespace

std::vector<WeightDistribution> transform_batch_serial(std::span<const TransformInput> inputs, TransformMethod method) {
    std::vector<WeightDistribution> out;
    out.reserve(inputs.size());
    for (const auto& in : inputs) out.push_back(transform_one(in, method));
    return out;
}

std::vector<WeightDistribution> transform_batch(std::span<const TransformInput> inputs, TransformMethod method) {
    const long count = static_cast<long>(inputs.size());
    std::vector<WeightDistribution> out(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = transform_one(inputs[static_cast<std::size_t>(i)], method);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

namespace {

void check_moment_args(const SchemeParams& params, const WeightDistribution& dist, const WeightDistribution& dual,
                       const BigInt& dual_size, long phi) {
    if (dist.n() != params.n || dual.n() != params.n) throw InvalidInput("moment: distribution length mismatch");
    if (phi < 0 || phi > params.n) throw InvalidInput("moment: phi out of range 0..n");
    if (dual_size <= 0) throw InvalidInput("moment: dual code size must be positive");
}

Rational count(const WeightDistribution& d, long i) { return Rational(d.counts[static_cast<std::size_t>(i)]); }

Rational signed_term(long i, Rational value) { return i % 2 == 0 ? value : Rational(-value); }

}  // namespace

MomentPair moment_b(const SchemeParams& params, const WeightDistribution& dist, const WeightDistribution& dual,
                    const BigInt& dual_size, long phi) {
    check_moment_args(params, dist, dual, dual_size, phi);
    const long n = params.n;
    const Rational& b = params.b;
    MomentPair out{0, 0};
    for (long i = 0; i <= n - phi; ++i) out.lhs += gauss(n - i, phi, b) * count(dist, i);
    Rational sum = 0;
    for (long i = 0; i <= phi; ++i) sum += gauss(n - i, n - phi, b) * count(dual, i);
    out.rhs = pow(params.cbn(), n - phi) * sum / Rational(dual_size);
    return out;
}

MomentPair moment_b(const TransformInput& in, long phi) {
    const WeightDistribution dual = transform_eigen(in);
    return moment_b(in.params, in.dist, dual, in.dual_size(), phi);
}

MomentPair moment_binv(const SchemeParams& params, const WeightDistribution& dist, const WeightDistribution& dual,
                       const BigInt& dual_size, long phi) {
    check_moment_args(params, dist, dual, dual_size, phi);
    const long n = params.n;
    const Rational& b = params.b;
    MomentPair out{0, 0};
    for (long i = phi; i <= n; ++i) out.lhs += pow(b, phi * (n - i)) * gauss(i, phi, b) * count(dist, i);
    out.rhs = pow(params.cbn(), n - phi) * moment_binv_diameter_sum(params, dual, phi) / Rational(dual_size);
    return out;
}

MomentPair moment_binv(const TransformInput& in, long phi) {
    const WeightDistribution dual = transform_eigen(in);
    return moment_binv(in.params, in.dist, dual, in.dual_size(), phi);
}

Rational moment_b_below_dual_distance(const SchemeParams& params, const BigInt& dual_size, long phi) {
    return pow(params.cbn(), params.n - phi) * gauss(params.n, phi, params.b) / Rational(dual_size);
}

Rational moment_binv_below_dual_distance(const SchemeParams& params, const BigInt& dual_size, long phi) {
    return pow(params.cbn(), params.n - phi) * gauss(params.n, phi, params.b) *
           gamma(params.n, phi, params.b, params.c) / Rational(dual_size);
}

Rational moment_binv_diameter_sum(const SchemeParams& params, const WeightDistribution& dist, long phi) {
    const long n = params.n;
    const Rational& b = params.b;
    Rational sum = 0;
    for (long i = 0; i <= phi; ++i) {
        sum += signed_term(i, pow(b, sigma(i) + i * (phi - i)) * gauss(n - i, n - phi, b) *
                                  gamma(n - i, phi - i, b, params.c) * count(dist, i));
    }
    return sum;
}

WeightDistribution maximal_distribution(const SchemeParams& params, long d_s, const BigInt& code_size) {
    const long n = params.n;
    if (d_s < 1 || d_s > n) throw InvalidInput("maximal_distribution: d must lie in 1..n");
    if (code_size <= 0 || params.space_size % code_size != 0) {
        throw InvalidInput("maximal_distribution: code size must divide |X|");
    }
    const Rational& b = params.b;
    const Rational dual_size(params.space_size / code_size);
    const Rational cbn = params.cbn();

    std::vector<Rational> values(static_cast<std::size_t>(n + 1), Rational(0));
    values[0] = 1;
    for (long w = 0; w <= n - d_s; ++w) {
        Rational sum = 0;
        for (long i = 0; i <= w; ++i) {
            const Rational tail = pow(cbn, d_s + i) / dual_size - 1;
            sum += signed_term(w - i, pow(b, sigma(w - i)) * gauss(d_s + w, d_s + i, b) * gauss(n, d_s + w, b) * tail);
        }
        values[static_cast<std::size_t>(d_s + w)] = sum;
    }
    WeightDistribution out = to_distribution(values, "maximal_distribution");
    if (out.total() != code_size) {
        throw IdentityViolation("maximal_distribution: counts sum to " + to_string(out.total()) + ", not |C| = " +
                                to_string(code_size) + "; no maximal code has these parameters");
    }
    return out;
}

std::vector<Rational> forward_triangular(std::span<const Rational> y, const Rational& b) {
    const long l = static_cast<long>(y.size()) - 1;
    std::vector<Rational> x(y.size());
    for (long j = 0; j <= l; ++j) {
        Rational sum = 0;
        for (long i = 0; i <= j; ++i) sum += gauss(l - i, l - j, b) * y[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(j)] = sum;
    }
    return x;
}

std::vector<Rational> invert_triangular(std::span<const Rational> x, const Rational& b) {
    const long l = static_cast<long>(x.size()) - 1;
    std::vector<Rational> y(x.size());
    for (long i = 0; i <= l; ++i) {
        Rational sum = 0;
        for (long j = 0; j <= i; ++j) {
            sum += signed_term(i - j, pow(b, sigma(i - j)) * gauss(l - j, l - i, b) * x[static_cast<std::size_t>(j)]);
        }
        y[static_cast<std::size_t>(i)] = sum;
    }
    return y;
}

}  // namespace kscheme
