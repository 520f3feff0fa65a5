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

#include "drinfeld/carlitz.hpp"

#include <algorithm>

#include "drinfeld/curve_ring.hpp"
#include "drinfeld/errors.hpp"

namespace drinfeld::carlitz {

namespace {

// F2(t) embeds in K as the y-free part, so the fraction arithmetic of K
// serves for 1/d_i. Strings are re-lettered when rendered.
std::string as_t(std::string s) {
  std::replace(s.begin(), s.end(), 'x', 't');
  return s;
}

}  // namespace

BinaryPoly bracket(unsigned n) { return BinaryPoly::monomial(std::size_t{1} << n) + BinaryPoly::monomial(1); }

BinaryPoly carlitz_d(unsigned n) {
  BinaryPoly recursive = BinaryPoly::one();
  for (unsigned i = 1; i <= n; ++i) recursive = bracket(i) * recursive.square();

  BinaryPoly closed = BinaryPoly::one();
  for (unsigned i = 1; i <= n; ++i) closed *= bracket(i).frobenius(n - i);

  if (recursive != closed) {
    throw VerificationFailure("carlitz d_" + std::to_string(n) + ": recursion " + recursive.to_string('t') +
                              " vs closed product " + closed.to_string('t'));
  }
  return recursive;
}

BinaryPoly carlitz_ell(unsigned n) {
  BinaryPoly product = BinaryPoly::one();
  for (unsigned i = 1; i <= n; ++i) product *= bracket(i);
  if (n >= 1 && bracket(n) * carlitz_ell(n - 1) != product) {
    throw VerificationFailure("carlitz l_" + std::to_string(n) + " != [n] l_{n-1}");
  }
  return product;
}

BinaryPoly monic_product(unsigned n) {
  if (n > 6) throw BudgetError("monic_product: n = " + std::to_string(n) + " exceeds 6");
  BinaryPoly product = BinaryPoly::one();
  const BinaryPoly lead = BinaryPoly::monomial(n);
  for (std::uint64_t low = 0; low < (std::uint64_t{1} << n); ++low) {
    product *= lead + BinaryPoly::from_mask(low);
  }
  return product;
}

bool FunctionalReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FunctionalCheck& c) { return c.ok; });
}

FunctionalReport carlitz_functional_check(unsigned order) {
  if (order < 1) throw BudgetError("carlitz_functional_check needs K >= 1");
  FunctionalReport report;
  report.interpretation = "C_t = t + tau, so e(tz) = t e(z) + e(z)^2";
  std::vector<KElem> a{KElem::one()};
  for (unsigned i = 1; i <= order; ++i) {
    a.push_back(KElem(AElem::from_poly(carlitz_d(i))).inverse());
  }
  for (unsigned i = 1; i <= order; ++i) {
    const KElem lhs = KElem(AElem::from_poly(bracket(i))) * a[i];
    const KElem rhs = a[i - 1].square();
    report.checks.push_back({i, lhs == rhs, as_t(lhs.to_string()), as_t(rhs.to_string())});
  }
  return report;
}

}  // namespace drinfeld::carlitz
