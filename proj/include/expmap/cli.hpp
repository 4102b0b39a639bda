// Copyright 2026 The expmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXPMAP_CLI_HPP
#define EXPMAP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "expmap/kernel_span.hpp"
#include "expmap/types.hpp"

namespace expmap::cli {

enum class Command { Certify, Dims, Witness, Kernel, Ppt };

std::string_view command_name(Command command);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kIo = 74;
}  // namespace exit_code

struct CliConfig {
  Command command = Command::Certify;
  int n = 2;
  std::uint64_t seed = 42;
  std::optional<Index> samples;  // per-command default when unset
  int restarts = 200;
  int iterations = 50000;
  double tol = 1e-10;
  std::optional<std::string> output_path;
  bool json = false;
};

/// Throws PreconditionError naming the first offending field.
void validate(const CliConfig& config);

/// Either a config to run or the exit code to return right away (help or usage error).
using ParseOutcome = std::variant<CliConfig, int>;

/// `args` excludes the program name. Help goes to `out`, usage errors to `err`.
ParseOutcome parse_args(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// kViolation if any verdict is Mismatch, else kInconclusive if any is
/// Inconclusive, else kOk.
int exit_code_for(std::span<const Verdict> verdicts);

/// Executes one command. Reports go to `out`; diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace expmap::cli

#endif  // EXPMAP_CLI_HPP
