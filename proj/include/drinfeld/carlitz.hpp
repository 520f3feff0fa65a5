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

#ifndef DRINFELD_CARLITZ_HPP
#define DRINFELD_CARLITZ_HPP

// Carlitz module over F2[t], C_t = t + tau. Its exponential and logarithm
// coefficients have closed forms, which makes it a baseline for the
// shared polynomial and fraction machinery. Polynomials in t are stored
// as BinaryPoly and printed with variable 't'.

#include <string>
#include <vector>

#include "drinfeld/f2poly.hpp"

namespace drinfeld::carlitz {

/// [n] = t^(2^n) + t.
BinaryPoly bracket(unsigned n);

/// d_n = [n] d_{n-1}^2 with d_0 = 1, checked against the closed product
/// [n][n-1]^2 ... [1]^(2^(n-1)). Throws VerificationFailure on mismatch.
BinaryPoly carlitz_d(unsigned n);

/// l_n = [n][n-1]...[1] (signs vanish in characteristic 2), checked
/// against l_n = [n] l_{n-1}.
BinaryPoly carlitz_ell(unsigned n);

/// Product of all 2^n monic polynomials of degree n. n <= 6.
BinaryPoly monic_product(unsigned n);

struct FunctionalCheck {
  unsigned index = 0;
  bool ok = false;
  /// "[i]*a_i" and "a_{i-1}^2" rendered.
  std::string lhs;
  std::string rhs;
};

struct FunctionalReport {
  /// How C_t is read; printed with the report.
  std::string interpretation;
  std::vector<FunctionalCheck> checks;
  bool ok() const;
};

/// [i] a_i = a_{i-1}^2 for 1 <= i <= K with a_i = 1/d_i, computed in the
/// fraction field (coefficients of z^(2^i) in e(tz) = t e(z) + e(z)^2).
/// Throws BudgetError for K < 1.
FunctionalReport carlitz_functional_check(unsigned order);

}  // namespace drinfeld::carlitz

#endif  // DRINFELD_CARLITZ_HPP
