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

#include "kscheme/cli/commands.hpp"

#include "kscheme/combinatorics.hpp"
#include "kscheme/krawtchouk.hpp"
#include "kscheme/oracle/code.hpp"
#include "kscheme/oracle/verify.hpp"
#include "kscheme/schemes.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <string>

namespace kscheme::cli {

namespace {

/// Largest space `verify` will enumerate.
constexpr std::uint64_t kVerifyLimit = std::uint64_t{1} << 16;

Json moment_json(const char* derivative, const MomentPair& m) {
    Json j;
    j["derivative"] = derivative;
    j["lhs"] = to_json(m.lhs);
    j["rhs"] = to_json(m.rhs);
    j["equal"] = m.balanced();
    return j;
}

Json axioms_suite(const oracle::AmbientSpace& space, std::uint64_t seed) {
    const oracle::AxiomReport report = oracle::verify_scheme_axioms(space, seed);
    Json j;
    j["passed"] = report.passed();
    j["exhaustive"] = report.exhaustive;
    j["pairsChecked"] = report.pairs_checked;
    j["valencies"] = report.valencies;
    j["violations"] = report.violations;
    return j;
}

Json eigen_suite(const oracle::AmbientSpace& space) {
    const SchemeParams& p = space.params();
    const auto table = oracle::char_eigenmatrix(space);
    Json mismatches = Json::array();
    for (long x = 0; x <= p.n; ++x) {
        for (long k = 0; k <= p.n; ++k) {
            const Rational expected = c_poly(k, x, p);
            if (Rational(table[x][k]) != expected) {
                mismatches.push_back(Json{{"k", k}, {"x", x}, {"characterSum", table[x][k]}, {"cPoly", to_json(expected)}});
            }
        }
    }
    Json j;
    j["passed"] = mismatches.empty();
    j["entriesChecked"] = (p.n + 1) * (p.n + 1);
    j["mismatches"] = mismatches;
    return j;
}

struct CodePair {
    WeightDistribution dist;
    WeightDistribution dual;
    BigInt size;
    BigInt dual_size;
    long dimension;
};

std::vector<CodePair> random_pairs(const oracle::AmbientSpace& space, long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CodePair> pairs;
    for (long t = 0; t < trials; ++t) {
        const oracle::CodeSpec code = oracle::random_code(space, rng());
        const oracle::CodeSpec dual = oracle::dual_code(space, code);
        pairs.push_back({oracle::weight_distribution(space, code), oracle::weight_distribution(space, dual),
                         oracle::code_size(space, code), oracle::code_size(space, dual),
                         oracle::dimension(space, code)});
    }
    return pairs;
}

Json transform_suite(const SchemeParams& p, const std::vector<CodePair>& pairs) {
    const Eigenmatrix eigen(p);
    Json failures = Json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const CodePair& c = pairs[i];
        const TransformInput in{c.dist, c.size, p};
        const WeightDistribution e = transform_eigen(in, eigen);
        const WeightDistribution f = transform_functional(in);
        if (!(e == c.dual && f == c.dual)) {
            failures.push_back(Json{{"trial", i}, {"weights", to_json(c.dist)}, {"bruteForceDual", to_json(c.dual)},
                                    {"eigen", to_json(e)}, {"functional", to_json(f)}});
        }
    }
    Json j;
    j["passed"] = failures.empty();
    j["trials"] = pairs.size();
    j["failures"] = failures;
    return j;
}

Json moments_suite(const SchemeParams& p, const std::vector<CodePair>& pairs) {
    Json failures = Json::array();
    long checks = 0;
    auto record = [&](std::size_t trial, long phi, const char* what, bool ok) {
        ++checks;
        if (!ok) failures.push_back(Json{{"trial", trial}, {"phi", phi}, {"check", what}});
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const CodePair& c = pairs[i];
        const long dual_distance = c.dual.minimum_distance();
        const long dual_diameter = c.dual.diameter();
        for (long phi = 0; phi <= p.n; ++phi) {
            const MomentPair mb = moment_b(p, c.dist, c.dual, c.dual_size, phi);
            const MomentPair mi = moment_binv(p, c.dist, c.dual, c.dual_size, phi);
            record(i, phi, "b", mb.balanced());
            record(i, phi, "b^-1", mi.balanced());
            record(i, phi, "b swapped", moment_b(p, c.dual, c.dist, c.size, phi).balanced());
            record(i, phi, "b^-1 swapped", moment_binv(p, c.dual, c.dist, c.size, phi).balanced());
            if (phi < dual_distance) {
                record(i, phi, "b below dual distance", mb.rhs == moment_b_below_dual_distance(p, c.dual_size, phi));
                record(i, phi, "b^-1 below dual distance",
                       mi.rhs == moment_binv_below_dual_distance(p, c.dual_size, phi));
            }
            if (dual_diameter < phi) {
                record(i, phi, "diameter sum", moment_binv_diameter_sum(p, c.dist, phi) == 0);
            }
        }
    }
    Json j;
    j["passed"] = failures.empty();
    j["trials"] = pairs.size();
    j["checks"] = checks;
    j["failures"] = failures;
    return j;
}

Json skipped(std::string reason) { return Json{{"passed", true}, {"skipped", std::move(reason)}}; }

}  // namespace

Json cmd_scheme_info(const SchemeParams& p) {
    const auto xis = xi_vector(p);
    const Eigenmatrix eigen(p);
    const auto valencies = eigen.valencies();
    bool equal = valencies.size() == xis.size();
    for (std::size_t i = 0; equal && i < xis.size(); ++i) equal = valencies[i] == Rational(xis[i]);

    Json j;
    j["scheme"] = scheme_to_json(p);
    j["b"] = to_json(p.b);
    j["c"] = to_json(p.c);
    j["n"] = p.n;
    j["spaceSize"] = to_json(p.space_size);
    j["cbn"] = to_json(p.cbn());
    Json xi = Json::array();
    for (const BigInt& v : xis) xi.push_back(to_json(v));
    j["xi"] = xi;
    j["valencies_equal_xi"] = equal;
    return j;
}

Json cmd_eigenmatrix(const SchemeParams& p) {
    const Eigenmatrix eigen(p);
    const auto xis = xi_vector(p);
    Json rows = Json::array();
    bool row0 = true;
    bool col0 = true;
    for (long i = 0; i < eigen.size(); ++i) {
        Json row = Json::array();
        for (long k = 0; k < eigen.size(); ++k) row.push_back(to_json(eigen(i, k)));
        rows.push_back(row);
        row0 = row0 && eigen(0, i) == Rational(xis[i]);
        col0 = col0 && eigen(i, 0) == 1;
    }
    Json j;
    j["scheme"] = scheme_to_json(p);
    j["matrix"] = rows;
    j["row0_equals_xi"] = row0;
    j["column0_ones"] = col0;
    j["square_equals_size_identity"] = eigen.is_scaled_involution();
    j["orthogonality"] = eigen.is_orthogonal();
    return j;
}

CommandResult cmd_transform(const SchemeParams& p, const WeightDistribution& dist, const BigInt& code_size,
                            std::string_view method) {
    const TransformInput in{dist, code_size, p};
    in.validate();
    CommandResult r;
    r.body["scheme"] = scheme_to_json(p);
    r.body["weights"] = to_json(dist);
    r.body["codeSize"] = to_json(code_size);
    r.body["dualSize"] = to_json(in.dual_size());
    if (method == "eigen") {
        r.body["dual"] = to_json(transform_eigen(in));
    } else if (method == "functional") {
        r.body["dual"] = to_json(transform_functional(in));
    } else if (method == "both") {
        const WeightDistribution e = transform_eigen(in);
        const WeightDistribution f = transform_functional(in);
        r.body["dual"] = to_json(e);
        r.body["functional"] = to_json(f);
        r.body["agree"] = e == f;
        if (!(e == f)) r.exit_code = kExitViolation;
    } else {
        throw InvalidInput("unknown transform method " + std::string(method));
    }
    return r;
}

CommandResult cmd_moments(const SchemeParams& p, const WeightDistribution& dist, const BigInt& code_size, long phi) {
    const TransformInput in{dist, code_size, p};
    in.validate();
    if (phi > p.n) throw InvalidInput("phi must lie in 0..n");
    const WeightDistribution dual = transform_eigen(in);
    CommandResult r;
    r.body["scheme"] = scheme_to_json(p);
    r.body["weights"] = to_json(dist);
    r.body["codeSize"] = to_json(code_size);
    r.body["dual"] = to_json(dual);
    Json list = Json::array();
    bool all = true;
    const long lo = phi < 0 ? 0 : phi;
    const long hi = phi < 0 ? p.n : phi;
    for (long f = lo; f <= hi; ++f) {
        const MomentPair mb = moment_b(p, dist, dual, in.dual_size(), f);
        const MomentPair mi = moment_binv(p, dist, dual, in.dual_size(), f);
        all = all && mb.balanced() && mi.balanced();
        Json entry;
        entry["phi"] = f;
        entry["b"] = moment_json("b", mb);
        entry["b_inverse"] = moment_json("b^-1", mi);
        list.push_back(entry);
    }
    r.body["moments"] = list;
    r.body["equal"] = all;
    if (!all) r.exit_code = kExitViolation;
    return r;
}

CommandResult cmd_maximal(const SchemeParams& p, long d_s, const BigInt& code_size) {
    CommandResult r;
    r.body["scheme"] = scheme_to_json(p);
    r.body["d"] = d_s;
    r.body["codeSize"] = to_json(code_size);
    r.body["distribution"] = to_json(maximal_distribution(p, d_s, code_size));
    return r;
}

CommandResult cmd_verify(const SchemeParams& p, std::string_view suite, long trials, std::uint64_t seed) {
    const bool all = suite == "all";
    if (!all && suite != "axioms" && suite != "eigen" && suite != "transform" && suite != "moments") {
        throw InvalidInput("unknown suite " + std::string(suite));
    }
    if (trials < 0) throw InvalidInput("trials must be nonnegative");
    if (p.space_size > BigInt(std::to_string(kVerifyLimit))) {
        throw InvalidInput("scheme too large to verify by enumeration: " + p.describe());
    }
    const oracle::AmbientSpace space(p);

    Json suites;
    if (all || suite == "axioms") {
        if (space.size() <= oracle::kAxiomLimit) {
            suites["axioms"] = axioms_suite(space, seed);
        } else if (all) {
            suites["axioms"] = skipped("space larger than 2^12 points");
        } else {
            throw InvalidInput("space larger than 2^12 points; axioms suite unavailable");
        }
    }
    if (all || suite == "eigen") {
        if (space.scalars().characteristic() == 2) {
            suites["eigen"] = eigen_suite(space);
        } else if (all) {
            suites["eigen"] = skipped("character sums need characteristic 2");
        } else {
            throw InvalidInput("eigen suite needs characteristic 2");
        }
    }
    if (all || suite == "transform" || suite == "moments") {
        const auto pairs = random_pairs(space, trials, seed);
        if (all || suite == "transform") suites["transform"] = transform_suite(p, pairs);
        if (all || suite == "moments") suites["moments"] = moments_suite(p, pairs);
    }

    bool passed = true;
    for (const auto& [name, result] : suites.items()) passed = passed && result.at("passed").get<bool>();
    CommandResult r;
    r.body["scheme"] = scheme_to_json(p);
    r.body["suite"] = std::string(suite);
    r.body["trials"] = trials;
    r.body["seed"] = seed;
    r.body["suites"] = suites;
    r.body["passed"] = passed;
    r.exit_code = passed ? kExitOk : kExitViolation;
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact MacWilliams transforms and moments for Krawtchouk association schemes"};
    app.require_subcommand(1);

    std::string scheme_text;
    std::string weights_text;
    std::string size_text;
    std::string method = "both";
    std::string suite = "all";
    std::string out_path;
    long phi = -1;
    long d = 0;
    long trials = 20;
    std::uint64_t seed = 1;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--scheme-json", scheme_text, "scheme spec: inline JSON object or path to a JSON file")
            ->required();
        cmd->add_option("--out", out_path, "write JSON here instead of stdout");
    };
    auto code_input = [&](CLI::App* cmd) {
        cmd->add_option("--weights", weights_text, "weight distribution, e.g. [1,0,0,1]")->required();
        cmd->add_option("--code-size", size_text, "|C|")->required();
    };

    CLI::App* scheme = app.add_subcommand("scheme", "scheme catalog");
    scheme->require_subcommand(1);
    CLI::App* info = scheme->add_subcommand("info", "parameters and element counts");
    common(info);
    CLI::App* eigen = scheme->add_subcommand("eigenmatrix", "exact eigenmatrix");
    common(eigen);

    CLI::App* transform = app.add_subcommand("transform", "dual weight distribution");
    common(transform);
    code_input(transform);
    transform->add_option("--method", method, "eigen, functional or both")
        ->check(CLI::IsMember({"eigen", "functional", "both"}));

    CLI::App* moments = app.add_subcommand("moments", "b and b^-1 moment identities");
    common(moments);
    code_input(moments);
    moments->add_option("--phi", phi, "derivative order (default: all of 0..n)")->check(CLI::NonNegativeNumber);

    CLI::App* maximal = app.add_subcommand("maximal", "weight distribution of a maximal code");
    common(maximal);
    maximal->add_option("--d", d, "minimum distance d_S")->required();
    maximal->add_option("--code-size", size_text, "|C|")->required();

    CLI::App* verify = app.add_subcommand("verify", "brute-force oracle suites");
    common(verify);
    verify->add_option("--suite", suite, "axioms, eigen, transform, moments or all")
        ->check(CLI::IsMember({"axioms", "eigen", "transform", "moments", "all"}));
    verify->add_option("--trials", trials, "random codes per suite")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    CommandResult result;
    try {
        const bool oracle = verify->parsed();
        const SchemeParams params = parse_scheme(scheme_text, oracle);
        if (info->parsed()) {
            result.body = cmd_scheme_info(params);
        } else if (eigen->parsed()) {
            result.body = cmd_eigenmatrix(params);
        } else if (transform->parsed()) {
            result = cmd_transform(params, parse_weights(weights_text), parse_count(size_text, "code size"), method);
        } else if (moments->parsed()) {
            result = cmd_moments(params, parse_weights(weights_text), parse_count(size_text, "code size"), phi);
        } else if (maximal->parsed()) {
            result = cmd_maximal(params, d, parse_count(size_text, "code size"));
        } else {
            result = cmd_verify(params, suite, trials, seed);
        }
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        result = {Json{{"error", e.what()}, {"status", "invalid_input"}}, kExitInvalid};
    } catch (const IdentityViolation& e) {
        err << "identity violation: " << e.what() << '\n';
        result = {Json{{"error", e.what()}, {"status", "violation"}}, kExitViolation};
    }

    const std::string text = result.body.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path);
        if (!file) {
            err << "cannot write " << out_path << '\n';
            return kExitInvalid;
        }
        file << text;
    }
    return result.exit_code;
}

}  // namespace kscheme::cli
