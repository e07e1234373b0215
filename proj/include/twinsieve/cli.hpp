// Copyright 2026 The twinsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Batch front end: `optimize`, `verify` and `sieve` subcommands writing JSON
// (or CSV for sweeps) reports.
namespace twinsieve::cli {

inline constexpr const char* kArtifact = "twinsieve";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

// args excludes the program name. Reports go to --out (default stdout);
// diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Polynomial {
  std::uint32_t degree = 0;
  std::vector<double> coefficients;
};

// {"degree": n, "coefficients": ["%.17g", ...]}; also accepts an optimize
// report, reading its "result" member.
Polynomial read_polynomial(const std::string& path);
std::string format_double(double v);

}  // namespace twinsieve::cli
