// Copyright 2026 The drinfeld-f2 Authors
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

#ifndef DRINFELD_CLI_HPP
#define DRINFELD_CLI_HPP

// Command-line front end. Every command writes results to `out` and
// diagnostics to `err` and returns the process exit code.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/curve_ring.hpp"
#include "drinfeld/verify.hpp"

namespace drinfeld::cli {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2 };

enum class Format { kText, kCsv, kJson };

inline constexpr int kTableMinK = 2;
inline constexpr int kTableMaxK = 14;
inline constexpr int kRhoMaxDegree = 16;
inline constexpr int kEkMaxK = 12;
inline constexpr int kEnumerateMaxDegree = 16;

/// Rows k = 2..max_k of (k, d_k, ell_k, D_k) plus the main-theorem status.
///   text: "k=2 d=x^2+x ell=(x^2+x)/(x^2+x+1) D=x^2+x", then a status line
///   csv:  header "k,d,ell,D"; the status goes to err
///   json: one object per line with keys k, d, ell, D, main_theorem
int run_table(int max_k, Format format, std::ostream& out, std::ostream& err);

/// deg(a) and rho_{a,0..deg a}; all three routes must agree.
int run_rho(std::string_view element, std::ostream& out, std::ostream& err);

/// D_k, the B_{k,i}, and (k <= 10) the T_{k,i}.
int run_ek(int k, std::ostream& out, std::ostream& err);

/// One element per line.
int run_enumerate(int degree, EnumMode mode, std::ostream& out, std::ostream& err);

int run_verify(Suite suite, int max_k, std::ostream& out, std::ostream& err);

/// Full argument parsing; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drinfeld::cli

#endif  // DRINFELD_CLI_HPP
