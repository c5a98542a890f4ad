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

#include "kscheme/oracle/code.hpp"

#include "json.hpp"
#include <omp.h>

#include <random>
#include <string>

namespace kscheme::oracle {

namespace {

std::uint64_t checked_size(const AmbientSpace& space, long dim) {
    std::uint64_t size = 1;
    const auto order = static_cast<std::uint64_t>(space.scalars().order());
    for (long i = 0; i < dim; ++i) {
        size *= order;
        if (size > kEnumerationLimit) {
            throw InvalidInput("code has more than 2^20 codewords; refusing to enumerate");
        }
    }
    return size;
}

// Codeword number `index`: the generator combination whose coefficients are
// the base-|F| digits of index.
void codeword_at(const AmbientSpace& space, const std::vector<Coords>& gens, std::uint64_t index, Coords& out) {
    const FiniteField& f = space.scalars();
    const auto order = static_cast<std::uint64_t>(f.order());
    std::fill(out.begin(), out.end(), Elem{0});
    for (const Coords& g : gens) {
        const auto a = static_cast<Elem>(index % order);
        index /= order;
        if (a == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(a, g[i]));
    }
}

CodeSpec from_coords(const AmbientSpace& space, const std::vector<Coords>& basis) {
    CodeSpec code{space.params(), {}};
    code.generators.reserve(basis.size());
    for (const Coords& v : basis) code.generators.push_back(space.element(v));
    return code;
}

WeightDistribution to_distribution(const std::vector<std::uint64_t>& counts) {
    WeightDistribution d;
    for (std::uint64_t c : counts) d.counts.emplace_back(std::to_string(c));
    return d;
}

}  // namespace

std::vector<Coords> generator_coords(const AmbientSpace& space, const CodeSpec& code) {
    if (!(code.params == space.params())) throw InvalidInput("code parameters do not match the space");
    std::vector<Coords> gens;
    gens.reserve(code.generators.size());
    for (const SchemeElement& g : code.generators) gens.push_back(space.coordinates(g));
    if (rank_of(space.scalars(), gens) != static_cast<long>(gens.size())) {
        throw InvalidInput("code generators are linearly dependent");
    }
    return gens;
}

long dimension(const AmbientSpace& space, const CodeSpec& code) {
    return static_cast<long>(generator_coords(space, code).size());
}

BigInt code_size(const AmbientSpace& space, const CodeSpec& code) {
    BigInt size;
    mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(space.scalars().order()),
                  static_cast<unsigned long>(dimension(space, code)));
    return size;
}

void for_each_codeword(const AmbientSpace& space, const CodeSpec& code,
                       const std::function<void(const Coords&)>& visit) {
    const auto gens = generator_coords(space, code);
    const std::uint64_t size = checked_size(space, static_cast<long>(gens.size()));
    Coords word = space.zero();
    for (std::uint64_t i = 0; i < size; ++i) {
        codeword_at(space, gens, i, word);
        visit(word);
    }
}

std::vector<SchemeElement> enumerate_code(const AmbientSpace& space, const CodeSpec& code) {
    std::vector<SchemeElement> out;
    for_each_codeword(space, code, [&](const Coords& w) { out.push_back(space.element(w)); });
    return out;
}

CodeSpec dual_code(const AmbientSpace& space, const CodeSpec& code) {
    const auto gens = generator_coords(space, code);
    const FiniteField& f = space.scalars();
    const long dim = space.dimension();
    const Matrix& gram = space.gram();
    Matrix constraints(static_cast<long>(gens.size()), dim);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (long col = 0; col < dim; ++col) {
            Elem s = 0;
            for (long r = 0; r < dim; ++r) s = f.add(s, f.mul(gens[j][r], gram(r, col)));
            constraints(static_cast<long>(j), col) = s;
        }
    }
    const auto basis = nullspace(f, constraints);
    if (static_cast<long>(gens.size() + basis.size()) != dim) {
        throw IdentityViolation("dim C + dim dual != dim X; the pairing is degenerate");
    }
    return from_coords(space, basis);
}

bool same_span(const AmbientSpace& space, const CodeSpec& a, const CodeSpec& b) {
    auto ga = generator_coords(space, a);
    const auto gb = generator_coords(space, b);
    if (ga.size() != gb.size()) return false;
    ga.insert(ga.end(), gb.begin(), gb.end());
    return rank_of(space.scalars(), ga) == static_cast<long>(gb.size());
}

WeightDistribution weight_distribution_serial(const AmbientSpace& space, const CodeSpec& code) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.params().n + 1), 0);
    for_each_codeword(space, code, [&](const Coords& w) { ++counts[static_cast<std::size_t>(space.weight(w))]; });
    return to_distribution(counts);
}

WeightDistribution weight_distribution(const AmbientSpace& space, const CodeSpec& code) {
    const auto gens = generator_coords(space, code);
    const auto size = static_cast<std::int64_t>(checked_size(space, static_cast<long>(gens.size())));
    const auto bins = static_cast<std::size_t>(space.params().n + 1);
    std::vector<std::uint64_t> counts(bins, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(bins, 0);
        Coords word = space.zero();
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < size; ++i) {
            codeword_at(space, gens, static_cast<std::uint64_t>(i), word);
            ++local[static_cast<std::size_t>(space.weight(word))];
        }
#pragma omp critical
        for (std::size_t w = 0; w < bins; ++w) counts[w] += local[w];
    }
    return to_distribution(counts);
}

CodeSpec zero_code(const AmbientSpace& space) { return CodeSpec{space.params(), {}}; }

CodeSpec full_code(const AmbientSpace& space) {
    std::vector<Coords> basis;
    for (long i = 0; i < space.dimension(); ++i) {
        Coords e = space.zero();
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return from_coords(space, basis);
}

CodeSpec random_code(const AmbientSpace& space, long dim, std::uint64_t seed) {
    if (dim < 0 || dim > space.dimension()) throw InvalidInput("random_code: dimension out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, space.scalars().order() - 1);
    std::vector<Coords> basis;
    while (static_cast<long>(basis.size()) < dim) {
        Coords v = space.zero();
        for (Elem& e : v) e = static_cast<Elem>(digit(rng));
        basis.push_back(v);
        if (rank_of(space.scalars(), basis) != static_cast<long>(basis.size())) basis.pop_back();
    }
    return from_coords(space, basis);
}

CodeSpec random_code(const AmbientSpace& space, std::uint64_t seed) {
    // Keep both the code and its dual within the enumeration guard.
    long cap = 0;
    for (std::uint64_t s = space.scalars().order(); s <= kEnumerationLimit; s *= space.scalars().order()) ++cap;
    const long dim = space.dimension();
    const long lo = std::max(0L, dim - cap);
    const long hi = std::min(dim, cap);
    std::mt19937_64 rng(seed);
    const long k = std::uniform_int_distribution<long>(lo, hi)(rng);
    return random_code(space, k, rng());
}

CodeSpec parse_generators(const AmbientSpace& space, std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("generators: ") + e.what());
    }
    if (!doc.is_array()) throw InvalidInput("generators must be a JSON array");
    const SchemeElement shape = space.element(space.zero());
    CodeSpec code{space.params(), {}};
    for (const auto& item : doc) {
        if (!item.is_array()) throw InvalidInput("each generator must be an array");
        SchemeElement e = shape;
        e.entries.clear();
        auto push = [&](const nlohmann::json& v) {
            if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= space.entries().order()) {
                throw InvalidInput("generator entries must be field-encoded integers");
            }
            e.entries.push_back(static_cast<Elem>(v.get<long>()));
        };
        for (const auto& row : item) {
            if (row.is_array()) {
                for (const auto& v : row) push(v);
            } else {
                push(row);
            }
        }
        if (static_cast<long>(e.entries.size()) != shape.rows * shape.cols) {
            throw InvalidInput("generator has " + std::to_string(e.entries.size()) + " entries, expected " +
                               std::to_string(shape.rows * shape.cols));
        }
        code.generators.push_back(std::move(e));
    }
    generator_coords(space, code);
    return code;
}

}  // namespace kscheme::oracle
