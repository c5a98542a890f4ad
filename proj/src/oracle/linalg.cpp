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

#include "kscheme/oracle/linalg.hpp"

#include <utility>

namespace kscheme::oracle {

std::vector<long> rref(const FiniteField& field, Matrix& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long pivot = row;
        while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row) {
            for (long j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
        }
        const Elem scale = field.inv(m(row, col));
        for (long j = 0; j < m.cols; ++j) m(row, j) = field.mul(m(row, j), scale);
        for (long i = 0; i < m.rows; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Elem factor = m(i, col);
            for (long j = 0; j < m.cols; ++j) m(i, j) = field.sub(m(i, j), field.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

long rank(const FiniteField& field, Matrix m) { return static_cast<long>(rref(field, m).size()); }

long rank_of(const FiniteField& field, std::span<const std::vector<Elem>> vectors) {
    if (vectors.empty()) return 0;
    Matrix m(static_cast<long>(vectors.size()), static_cast<long>(vectors.front().size()));
    for (long i = 0; i < m.rows; ++i) {
        for (long j = 0; j < m.cols; ++j) m(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return rank(field, std::move(m));
}

std::vector<std::vector<Elem>> nullspace(const FiniteField& field, Matrix m) {
    const auto pivots = rref(field, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (long c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Elem>> basis;
    for (long free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Elem> v(static_cast<std::size_t>(m.cols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = field.neg(m(static_cast<long>(r), free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kscheme::oracle
