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

#ifndef KSCHEME_CLI_COMMANDS_HPP
#define KSCHEME_CLI_COMMANDS_HPP

#include "kscheme/cli/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace kscheme::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitViolation = 3;

struct CommandResult {
    Json body;
    int exit_code = kExitOk;
};

Json cmd_scheme_info(const SchemeParams& params);
Json cmd_eigenmatrix(const SchemeParams& params);
/// method is "eigen", "functional" or "both".
CommandResult cmd_transform(const SchemeParams& params, const WeightDistribution& dist, const BigInt& code_size,
                            std::string_view method);
/// phi < 0 means every phi in 0..n.
CommandResult cmd_moments(const SchemeParams& params, const WeightDistribution& dist, const BigInt& code_size,
                          long phi);
CommandResult cmd_maximal(const SchemeParams& params, long d_s, const BigInt& code_size);
/// suite is "axioms", "eigen", "transform", "moments" or "all".
CommandResult cmd_verify(const SchemeParams& params, std::string_view suite, long trials, std::uint64_t seed);

/// Full command line entry point. Writes JSON to `out` (or the --out file)
/// and diagnostics to `err`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kscheme::cli

#endif  // KSCHEME_CLI_COMMANDS_HPP
