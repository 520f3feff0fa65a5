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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drinfeld/carlitz.hpp"
#include "drinfeld/errors.hpp"

using drinfeld::BinaryPoly;
namespace carlitz = drinfeld::carlitz;

namespace {

BinaryPoly T(const char* s) { return BinaryPoly::parse(s, 't'); }

}  // namespace

TEST_CASE("brackets") {
  CHECK(carlitz::bracket(1) == T("t^2+t"));
  CHECK(carlitz::bracket(0).is_zero());
  for (unsigned n = 2; n <= 8; ++n) CHECK(carlitz::bracket(n) == carlitz::bracket(n - 1).square() + carlitz::bracket(1));
}

TEST_CASE("d_n") {
  CHECK(carlitz::carlitz_d(0).is_one());
  CHECK(carlitz::carlitz_d(1) == T("t^2+t"));
  CHECK(carlitz::carlitz_d(2) == T("t^4+t") * T("t^2+t").square());
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(carlitz::carlitz_d(n) == carlitz::monic_product(n));
    CHECK(carlitz::carlitz_d(n).degree() == static_cast<std::int64_t>(n) << n);
  }
  for (unsigned n = 7; n <= 12; ++n) CHECK(carlitz::carlitz_d(n).degree() == static_cast<std::int64_t>(n) << n);
  CHECK_THROWS_AS(carlitz::monic_product(7), drinfeld::BudgetError);
}

TEST_CASE("l_n") {
  CHECK(carlitz::carlitz_ell(0).is_one());
  CHECK(carlitz::carlitz_ell(1) == T("t^2+t"));
  CHECK(carlitz::carlitz_ell(2) == T("t^4+t") * T("t^2+t"));
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(carlitz::carlitz_ell(n) == carlitz::bracket(n) * carlitz::carlitz_ell(n - 1));
    CHECK(carlitz::carlitz_ell(n).degree() == (std::int64_t{2} << n) - 2);
  }
}

TEST_CASE("functional equation coefficients") {
  const carlitz::FunctionalReport r = carlitz::carlitz_functional_check(8);
  CHECK(r.ok());
  CHECK(r.checks.size() == 8);
  CHECK(r.interpretation.find("t + tau") != std::string::npos);
  CHECK(r.checks.front().lhs == r.checks.front().rhs);
  CHECK(r.checks.front().rhs == "1");
  CHECK(r.checks.back().lhs.find('x') == std::string::npos);
  CHECK_THROWS_AS(carlitz::carlitz_functional_check(0), drinfeld::BudgetError);
}
