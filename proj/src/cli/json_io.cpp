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

#include "kscheme/cli/json_io.hpp"

#include "kscheme/schemes.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace kscheme::cli {

namespace {

long get_dim(const Json& spec, const char* key) {
    if (!spec.contains(key)) throw InvalidInput(std::string("scheme spec is missing \"") + key + "\"");
    const Json& v = spec.at(key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("scheme field \"") + key + "\" must be an integer");
    return v.get<long>();
}

Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

BigInt parse_bigint(const std::string& text, std::string_view what) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0) {
        throw InvalidInput(std::string(what) + ": not an integer: " + text);
    }
    return v;
}

}  // namespace

SchemeParams scheme_from_json(const Json& spec, bool require_prime_power) {
    if (!spec.is_object()) throw InvalidInput("scheme spec must be a JSON object");
    if (!spec.contains("kind") || !spec.at("kind").is_string()) throw InvalidInput("scheme spec needs a string \"kind\"");
    const SchemeKind kind = parse_kind(spec.at("kind").get<std::string>());
    const long q = get_dim(spec, "q");
    std::vector<long> dims;
    switch (kind) {
        case SchemeKind::Hamming: dims = {get_dim(spec, "n")}; break;
        case SchemeKind::Bilinear:
        case SchemeKind::Gabidulin: dims = {get_dim(spec, "m"), get_dim(spec, "n")}; break;
        case SchemeKind::Skew:
        case SchemeKind::Hermitian: dims = {get_dim(spec, "t")}; break;
    }
    return make_scheme(kind, q, dims, require_prime_power);
}

SchemeParams parse_scheme(std::string_view text, bool require_prime_power) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return scheme_from_json(parse_json(text, "scheme spec"), require_prime_power);
    }
    std::ifstream in{std::string(text)};
    if (!in) throw InvalidInput("cannot read scheme spec file " + std::string(text));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return scheme_from_json(parse_json(buffer.str(), "scheme spec"), require_prime_power);
}

Json scheme_to_json(const SchemeParams& p) {
    Json j;
    j["kind"] = std::string(kind_name(p.kind));
    j["q"] = p.q;
    switch (p.kind) {
        case SchemeKind::Hamming: j["n"] = p.n; break;
        case SchemeKind::Bilinear:
        case SchemeKind::Gabidulin:
            j["m"] = p.m;
            j["n"] = p.n;
            break;
        case SchemeKind::Skew:
        case SchemeKind::Hermitian: j["t"] = p.m; break;
    }
    return j;
}

Json to_json(const BigInt& v) {
    static const BigInt limit = BigInt(1) << 53;
    if (abs(v) <= limit) return Json(v.get_si());
    return Json(v.get_str());
}

Json to_json(const Rational& v) {
    if (is_integer(v)) return to_json(BigInt(v.get_num()));
    return Json(to_string(v));
}

Json to_json(const WeightDistribution& d) {
    Json out = Json::array();
    for (const BigInt& c : d.counts) out.push_back(to_json(c));
    return out;
}

WeightDistribution parse_weights(std::string_view text) {
    std::string body(text);
    const std::size_t first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidInput("empty weight list");
    if (body[first] != '[') body = "[" + body + "]";
    const Json arr = parse_json(body, "weights");
    if (!arr.is_array() || arr.empty()) throw InvalidInput("weights must be a nonempty list");
    WeightDistribution d;
    for (const Json& v : arr) {
        if (v.is_number_integer()) {
            d.counts.emplace_back(v.get<long>());
        } else if (v.is_string()) {
            d.counts.push_back(parse_bigint(v.get<std::string>(), "weights"));
        } else {
            throw InvalidInput("weights must be integers");
        }
    }
    return d;
}

BigInt parse_count(std::string_view text, std::string_view what) { return parse_bigint(std::string(text), what); }

}  // namespace kscheme::cli
