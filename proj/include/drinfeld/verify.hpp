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

#ifndef DRINFELD_VERIFY_HPP
#define DRINFELD_VERIFY_HPP

// Named verification suites. Each check becomes one line; exceptions from
// the library are caught and reported as failures with their message.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drinfeld {

enum class Suite { kAll, kCommute, kSeries, kDivision, kMain, kSymbols, kCarlitz };

inline constexpr int kVerifyMinK = 2;
inline constexpr int kVerifyMaxK = 12;

/// Case-insensitive suite name ("all", "commute", ...). nullopt if unknown.
std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct CheckLine {
  Suite suite = Suite::kAll;
  std::string name;
  bool ok = false;
  std::string detail;

  /// "[PASS] MAIN k=3: d_3 OK / ell_3 OK".
  std::string render() const;
};

struct VerifyReport {
  std::vector<CheckLine> lines;
  bool ok() const;
  /// First failing line, if any.
  const CheckLine* first_failure() const;
};

/// Runs one suite (or all of them) with size parameter max_k.
/// Throws BudgetError unless kVerifyMinK <= max_k <= kVerifyMaxK.
VerifyReport run_suite(Suite suite, int max_k);

}  // namespace drinfeld

#endif  // DRINFELD_VERIFY_HPP
