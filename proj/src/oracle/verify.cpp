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

#include "kscheme/oracle/verify.hpp"

#include "kscheme/schemes.hpp"

#include <omp.h>

#include <random>
#include <string>

namespace kscheme::oracle {

namespace {

void require_char2(const AmbientSpace& space) {
    if (space.scalars().characteristic() != 2) {
        throw InvalidInput("character sums are only exact in characteristic 2");
    }
    if (space.size() > kCharacterSumLimit) throw InvalidInput("space too large for character sums");
}

std::vector<Coords> all_points(const AmbientSpace& space) {
    std::vector<Coords> points(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) points[i] = space.point(i);
    return points;
}

struct Representatives {
    std::vector<std::uint64_t> first;
    std::vector<std::uint64_t> second;
};

Representatives representatives(const AmbientSpace& space, const std::vector<long>& weights) {
    const long n = space.params().n;
    Representatives reps{std::vector<std::uint64_t>(n + 1, space.size()), std::vector<std::uint64_t>(n + 1, 0)};
    for (std::uint64_t i = 0; i < weights.size(); ++i) {
        const long w = weights[i];
        if (reps.first[w] == space.size()) reps.first[w] = i;
        reps.second[w] = i;
    }
    for (long x = 0; x <= n; ++x) {
        if (reps.first[x] == space.size()) {
            throw IdentityViolation("no point of weight " + std::to_string(x) + " in " + space.params().describe());
        }
    }
    return reps;
}

int character(const AmbientSpace& space, const Coords& e, const Coords& y) {
    return space.scalars().absolute_trace(space.pairing(e, y)) == 0 ? 1 : -1;
}

std::vector<long> row_serial(const AmbientSpace& space, const std::vector<Coords>& points,
                             const std::vector<long>& weights, const Coords& y) {
    std::vector<long> sums(static_cast<std::size_t>(space.params().n + 1), 0);
    for (std::size_t i = 0; i < points.size(); ++i) sums[weights[i]] += character(space, points[i], y);
    return sums;
}

std::vector<long> row_parallel(const AmbientSpace& space, const std::vector<Coords>& points,
                               const std::vector<long>& weights, const Coords& y) {
    const auto bins = static_cast<std::size_t>(space.params().n + 1);
    std::vector<long> sums(bins, 0);
    const auto size = static_cast<std::int64_t>(points.size());
#pragma omp parallel
    {
        std::vector<long> local(bins, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < size; ++i) local[weights[i]] += character(space, points[i], y);
#pragma omp critical
        for (std::size_t k = 0; k < bins; ++k) sums[k] += local[k];
    }
    return sums;
}

template <typename RowFn>
std::vector<std::vector<long>> eigenmatrix_with(const AmbientSpace& space, const std::vector<long>& weights,
                                                RowFn row) {
    const std::vector<Coords> points = all_points(space);
    const Representatives reps = representatives(space, weights);
    std::vector<std::vector<long>> table;
    for (long x = 0; x <= space.params().n; ++x) {
        std::vector<long> a = row(space, points, weights, points[reps.first[x]]);
        if (reps.second[x] != reps.first[x] && row(space, points, weights, points[reps.second[x]]) != a) {
            throw IdentityViolation("character sum depends on the representative of weight " + std::to_string(x));
        }
        table.push_back(std::move(a));
    }
    return table;
}

std::vector<long> weight_table_serial(const AmbientSpace& space) {
    std::vector<long> w(space.size());
    for (std::uint64_t i = 0; i < space.size(); ++i) w[i] = space.weight(space.point(i));
    return w;
}

std::vector<long> weight_table(const AmbientSpace& space) {
    std::vector<long> w(space.size());
    const auto size = static_cast<std::int64_t>(space.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) w[i] = space.weight(space.point(static_cast<std::uint64_t>(i)));
    return w;
}

}  // namespace

long char_eigenvalue(const AmbientSpace& space, long k, long x) {
    require_char2(space);
    const long n = space.params().n;
    if (k < 0 || k > n || x < 0 || x > n) throw InvalidInput("char_eigenvalue: index out of range");
    const std::vector<long> weights = weight_table(space);
    const std::vector<Coords> points = all_points(space);
    const Representatives reps = representatives(space, weights);
    const long a = row_parallel(space, points, weights, points[reps.first[x]])[k];
    const long b = row_parallel(space, points, weights, points[reps.second[x]])[k];
    if (a != b) {
        throw IdentityViolation("character sum depends on the representative of weight " + std::to_string(x));
    }
    return a;
}

std::vector<std::vector<long>> char_eigenmatrix(const AmbientSpace& space) {
    require_char2(space);
    return eigenmatrix_with(space, weight_table(space), row_parallel);
}

std::vector<std::vector<long>> char_eigenmatrix_serial(const AmbientSpace& space) {
    require_char2(space);
    return eigenmatrix_with(space, weight_table_serial(space), row_serial);
}

AxiomReport verify_scheme_axioms(const AmbientSpace& space, std::uint64_t seed, long samples) {
    if (space.size() > kAxiomLimit) throw InvalidInput("space too large for the axiom check");
    const long n = space.params().n;
    const std::uint64_t size = space.size();
    const std::vector<long> weights = weight_table(space);
    const std::vector<Coords> points = all_points(space);
    auto rel = [&](std::uint64_t a, std::uint64_t b) {
        return weights[space.index_of(space.sub(points[a], points[b]))];
    };

    AxiomReport report;
    auto fail = [&](std::string what) {
        if (report.violations.size() < 64) report.violations.push_back(std::move(what));
    };

    // Relation table, then R_0 = diagonal, symmetry, and every R_i nonempty.
    std::vector<std::uint8_t> table(size * size);
    std::vector<std::uint64_t> relation_size(n + 1, 0);
    for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b) {
            const long r = rel(a, b);
            if (r < 0 || r > n) {
                fail("weight out of range at a pair");
                continue;
            }
            table[a * size + b] = static_cast<std::uint8_t>(r);
            ++relation_size[r];
            if ((r == 0) != (a == b)) fail("R_0 is not the diagonal");
        }
    }
    for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = a + 1; b < size; ++b)
            if (table[a * size + b] != table[b * size + a]) fail("relations are not symmetric");
    for (long i = 0; i <= n; ++i)
        if (relation_size[i] == 0) fail("relation R_" + std::to_string(i) + " is empty");

    report.valencies.assign(n + 1, 0);
    for (std::uint64_t b = 0; b < size; ++b) ++report.valencies[table[b]];
    const auto xis = xi_vector(space.params());
    for (long i = 0; i <= n; ++i) {
        if (BigInt(report.valencies[i]) != xis[i]) fail("valency v_" + std::to_string(i) + " differs from xi");
    }

    report.exhaustive = size * size * size <= (std::uint64_t{1} << 24);
    std::mt19937_64 rng(seed);
    report.intersection.assign(n + 1, std::vector<std::vector<long>>(n + 1, std::vector<long>(n + 1, -1)));
    for (long k = 0; k <= n; ++k) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> chosen;
        if (report.exhaustive) {
            for (std::uint64_t a = 0; a < size; ++a)
                for (std::uint64_t b = 0; b < size; ++b)
                    if (table[a * size + b] == k) chosen.emplace_back(a, b);
        } else {
            // Random x, then a random y with (x, y) in R_k.
            std::uniform_int_distribution<std::uint64_t> pick_point(0, size - 1);
            for (long s = 0; s < samples && relation_size[k] > 0; ++s) {
                const std::uint64_t x = pick_point(rng);
                std::vector<std::uint64_t> row;
                for (std::uint64_t y = 0; y < size; ++y)
                    if (table[x * size + y] == k) row.push_back(y);
                if (row.empty()) continue;
                chosen.emplace_back(x, row[std::uniform_int_distribution<std::size_t>(0, row.size() - 1)(rng)]);
            }
        }
        for (auto [x, y] : chosen) {
            std::vector<std::vector<long>> c(n + 1, std::vector<long>(n + 1, 0));
            for (std::uint64_t z = 0; z < size; ++z) ++c[table[x * size + z]][table[z * size + y]];
            ++report.pairs_checked;
            for (long i = 0; i <= n; ++i) {
                long row = 0;
                for (long j = 0; j <= n; ++j) {
                    row += c[i][j];
                    long& seen = report.intersection[i][j][k];
                    if (seen < 0) seen = c[i][j];
                    else if (seen != c[i][j])
                        fail("c_" + std::to_string(i) + std::to_string(j) + std::to_string(k) + " is not constant");
                }
                if (row != report.valencies[i]) fail("sum_j c_ijk differs from v_i");
            }
        }
    }
    return report;
}

}  // namespace kscheme::oracle
