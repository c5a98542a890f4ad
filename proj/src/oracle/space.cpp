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

#include "kscheme/oracle/space.hpp"

#include "kscheme/schemes.hpp"

#include <string>

namespace kscheme::oracle {

namespace {

int field_order(long q, long e) {
    long order = 1;
    for (long i = 0; i < e; ++i) {
        order *= q;
        if (order > 16) throw InvalidInput("oracle fields are limited to order 16");
    }
    return static_cast<int>(order);
}

int scalar_order(const SchemeParams& p) {
    return p.kind == SchemeKind::Gabidulin ? field_order(p.q, p.m) : field_order(p.q, 1);
}

int entry_order(const SchemeParams& p) {
    switch (p.kind) {
        case SchemeKind::Gabidulin: return field_order(p.q, p.m);
        case SchemeKind::Hermitian: return field_order(p.q, 2);
        default: return field_order(p.q, 1);
    }
}

long coordinate_count(const SchemeParams& p) {
    switch (p.kind) {
        case SchemeKind::Hamming:
        case SchemeKind::Gabidulin: return p.n;
        case SchemeKind::Bilinear: return p.m * p.n;
        case SchemeKind::Skew: return p.m * (p.m - 1) / 2;
        case SchemeKind::Hermitian: return p.m * p.m;
    }
    return 0;
}

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

AmbientSpace::AmbientSpace(const SchemeParams& params)
    : params_(params),
      scalars_(scalar_order(params)),
      entries_(entry_order(params)),
      base_(field_order(params.q, 1)),
      dim_(coordinate_count(params)),
      size_(1) {
    if ((params.kind == SchemeKind::Gabidulin || params.kind == SchemeKind::Hermitian) && !is_prime(params.q)) {
        throw InvalidInput(std::string(kind_name(params.kind)) + " oracle needs prime q");
    }
    for (long i = 0; i < dim_; ++i) {
        if (size_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(scalars_.order())) {
            throw InvalidInput("ambient space too large for the oracle: " + params.describe());
        }
        size_ *= static_cast<std::uint64_t>(scalars_.order());
    }
    if (BigInt(std::to_string(size_)) != params.space_size) {
        throw IdentityViolation("ambient space size disagrees with |X| for " + params.describe());
    }

    gram_ = Matrix(dim_, dim_);
    Coords ei = zero();
    Coords ej = zero();
    for (long i = 0; i < dim_; ++i) {
        ei[i] = 1;
        for (long j = 0; j < dim_; ++j) {
            ej[j] = 1;
            gram_(i, j) = pairing(ei, ej);
            ej[j] = 0;
        }
        ei[i] = 0;
    }
    if (rank(scalars_, gram_) != dim_) {
        throw IdentityViolation("pairing is degenerate for " + params.describe());
    }
}

SchemeElement AmbientSpace::element(const Coords& x) const {
    if (static_cast<long>(x.size()) != dim_) throw InvalidInput("coordinate vector has wrong length");
    SchemeElement e;
    e.kind = params_.kind;
    const long t = params_.m;
    switch (params_.kind) {
        case SchemeKind::Hamming:
        case SchemeKind::Gabidulin:
            e.rows = 1;
            e.cols = params_.n;
            e.entries = x;
            break;
        case SchemeKind::Bilinear:
            e.rows = params_.m;
            e.cols = params_.n;
            e.entries = x;
            break;
        case SchemeKind::Skew: {
            e.rows = e.cols = t;
            e.entries.assign(static_cast<std::size_t>(t * t), 0);
            long pos = 0;
            for (long i = 0; i < t; ++i) {
                for (long j = i + 1; j < t; ++j, ++pos) {
                    e.entries[i * t + j] = x[pos];
                    e.entries[j * t + i] = entries_.neg(x[pos]);
                }
            }
            break;
        }
        case SchemeKind::Hermitian: {
            e.rows = e.cols = t;
            e.entries.assign(static_cast<std::size_t>(t * t), 0);
            const auto q = static_cast<Elem>(params_.q);
            for (long i = 0; i < t; ++i) e.entries[i * t + i] = x[i];
            long pos = t;
            for (long i = 0; i < t; ++i) {
                for (long j = i + 1; j < t; ++j, pos += 2) {
                    const Elem a = static_cast<Elem>(x[pos] + x[pos + 1] * q);
                    e.entries[i * t + j] = a;
                    e.entries[j * t + i] = entries_.frobenius(a);
                }
            }
            break;
        }
    }
    return e;
}

Coords AmbientSpace::coordinates(const SchemeElement& e) const {
    if (e.kind != params_.kind) throw InvalidInput("element kind does not match the space");
    const SchemeElement shape = element(zero());
    if (e.rows != shape.rows || e.cols != shape.cols ||
        static_cast<long>(e.entries.size()) != e.rows * e.cols) {
        throw InvalidInput("element has wrong shape for " + params_.describe());
    }
    for (Elem v : e.entries) {
        if (v >= entries_.order()) throw InvalidInput("element entry outside the field");
    }
    Coords x = zero();
    const long t = params_.m;
    switch (params_.kind) {
        case SchemeKind::Hamming:
        case SchemeKind::Gabidulin:
        case SchemeKind::Bilinear:
            x = e.entries;
            break;
        case SchemeKind::Skew: {
            long pos = 0;
            for (long i = 0; i < t; ++i) {
                if (e.at(i, i) != 0) throw InvalidInput("alternating matrix needs a zero diagonal");
                for (long j = i + 1; j < t; ++j, ++pos) {
                    if (e.at(j, i) != entries_.neg(e.at(i, j))) throw InvalidInput("matrix is not skew-symmetric");
                    x[pos] = e.at(i, j);
                }
            }
            break;
        }
        case SchemeKind::Hermitian: {
            const auto q = static_cast<Elem>(params_.q);
            for (long i = 0; i < t; ++i) {
                if (e.at(i, i) >= q) throw InvalidInput("Hermitian diagonal must lie in F_q");
                x[i] = e.at(i, i);
            }
            long pos = t;
            for (long i = 0; i < t; ++i) {
                for (long j = i + 1; j < t; ++j, pos += 2) {
                    if (e.at(j, i) != entries_.frobenius(e.at(i, j))) throw InvalidInput("matrix is not Hermitian");
                    x[pos] = static_cast<Elem>(e.at(i, j) % q);
                    x[pos + 1] = static_cast<Elem>(e.at(i, j) / q);
                }
            }
            break;
        }
    }
    return x;
}

Coords AmbientSpace::point(std::uint64_t index) const {
    Coords x = zero();
    const auto base = static_cast<std::uint64_t>(scalars_.order());
    for (long i = 0; i < dim_; ++i) {
        x[i] = static_cast<Elem>(index % base);
        index /= base;
    }
    return x;
}

std::uint64_t AmbientSpace::index_of(const Coords& x) const {
    std::uint64_t index = 0;
    for (long i = dim_ - 1; i >= 0; --i) index = index * static_cast<std::uint64_t>(scalars_.order()) + x[i];
    return index;
}

long AmbientSpace::matrix_weight(const SchemeElement& e) const {
    switch (params_.kind) {
        case SchemeKind::Hamming: {
            long w = 0;
            for (Elem v : e.entries) w += v != 0;
            return w;
        }
        case SchemeKind::Gabidulin: {
            // Expand each coordinate over F_q: column j holds the digits of x_j.
            const long m = params_.m;
            Matrix expanded(m, e.cols);
            for (long j = 0; j < e.cols; ++j) {
                long v = e.entries[j];
                for (long r = 0; r < m; ++r, v /= params_.q) expanded(r, j) = static_cast<Elem>(v % params_.q);
            }
            return rank(base_, std::move(expanded));
        }
        case SchemeKind::Bilinear:
        case SchemeKind::Skew:
        case SchemeKind::Hermitian: {
            Matrix a(e.rows, e.cols);
            a.data = e.entries;
            const long r = rank(entries_, std::move(a));
            if (params_.kind != SchemeKind::Skew) return r;
            if (r % 2 != 0) throw IdentityViolation("alternating matrix of odd rank");
            return r / 2;
        }
    }
    return 0;
}

long AmbientSpace::weight(const Coords& x) const { return matrix_weight(element(x)); }

long weight(const AmbientSpace& space, const SchemeElement& e) {
    // Round-trip through coordinates to validate the structure first.
    return space.weight(space.coordinates(e));
}

Elem AmbientSpace::pairing(const Coords& x, const Coords& y) const {
    if (static_cast<long>(x.size()) != dim_ || static_cast<long>(y.size()) != dim_) {
        throw InvalidInput("coordinate vector has wrong length");
    }
    switch (params_.kind) {
        case SchemeKind::Hamming:
        case SchemeKind::Gabidulin:
        case SchemeKind::Bilinear:
        case SchemeKind::Skew: {
            // Skew coordinates are the strict upper triangle, so this is sum_{i<j} A_ij B_ij.
            Elem s = 0;
            for (long i = 0; i < dim_; ++i) s = scalars_.add(s, scalars_.mul(x[i], y[i]));
            return s;
        }
        case SchemeKind::Hermitian: {
            const SchemeElement a = element(x);
            const SchemeElement b = element(y);
            const long t = params_.m;
            Elem s = 0;
            for (long i = 0; i < t; ++i)
                for (long j = 0; j < t; ++j) s = entries_.add(s, entries_.mul(a.at(i, j), b.at(j, i)));
            if (s >= params_.q) throw IdentityViolation("Hermitian trace form left F_q");
            return s;
        }
    }
    return 0;
}

Coords AmbientSpace::add(const Coords& x, const Coords& y) const {
    Coords r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = scalars_.add(x[i], y[i]);
    return r;
}

Coords AmbientSpace::sub(const Coords& x, const Coords& y) const {
    Coords r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = scalars_.sub(x[i], y[i]);
    return r;
}

Coords AmbientSpace::scale(Elem a, const Coords& x) const {
    Coords r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = scalars_.mul(a, x[i]);
    return r;
}

}  // namespace kscheme::oracle
