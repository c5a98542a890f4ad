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

#ifndef KSCHEME_ORACLE_LINALG_HPP
#define KSCHEME_ORACLE_LINALG_HPP

#include "kscheme/oracle/field.hpp"

#include <span>
#include <vector>

namespace kscheme::oracle {

/// Dense row-major matrix over a FiniteField.
struct Matrix {
    long rows = 0;
    long cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), 0) {}

    Elem& operator()(long i, long j) { return data[static_cast<std::size_t>(i * cols + j)]; }
    Elem operator()(long i, long j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
};

/// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<long> rref(const FiniteField& field, Matrix& m);

long rank(const FiniteField& field, Matrix m);

/// Rank of the rows of `vectors` (each of equal length).
long rank_of(const FiniteField& field, std::span<const std::vector<Elem>> vectors);

/// Basis of {y : m y = 0}.
std::vector<std::vector<Elem>> nullspace(const FiniteField& field, Matrix m);

}  // namespace kscheme::oracle

#endif  // KSCHEME_ORACLE_LINALG_HPP
