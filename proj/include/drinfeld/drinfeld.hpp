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

#ifndef DRINFELD_DRINFELD_HPP
#define DRINFELD_DRINFELD_HPP

// The rank-one sign-normalised Drinfeld module rho: A -> K{tau} with
//   rho_x = x + (x^2+x) tau + tau^2
//   rho_y = y + (y^2+y) tau + x(y^2+y) tau^2 + tau^3.

#include <vector>

#include "drinfeld/additive.hpp"
#include "drinfeld/curve_ring.hpp"
#include "drinfeld/twisted.hpp"

namespace drinfeld {

struct DrinfeldGenerators {
  TwistedPoly rho_x;
  TwistedPoly rho_y;
};

/// Builds rho_x with x_1 = x^2 + x and solves the tau^1 and tau^2
/// coefficients of rho_x rho_y = rho_y rho_x for y_1 and y_2. Every
/// division must be exact (ConsistencyError otherwise), and the full
/// commutator must vanish (VerificationFailure otherwise).
DrinfeldGenerators derive_generators();

/// derive_generators(), computed once.
const DrinfeldGenerators& generators();

/// rho_a from commutation with rho_x:
///   rho_{a,0} = a, rho_{a,1} = a^2 + a,
///   [k]_x rho_{a,k} = [1]_x^(2^(k-1)) rho_{a,k-1} + rho_{a,k-2}
///                   + [1]_x rho_{a,k-1}^2 + rho_{a,k-2}^4.
/// Throws ConsistencyError if a coefficient leaves A, the leading
/// coefficient is not 1, or the next coefficient does not vanish.
TwistedPoly rho_recursive(const AElem& a);

/// f(rho_x) + g(rho_x) rho_y for a = f + g y, Horner in rho_x.
TwistedPoly rho_compose(const AElem& a);

/// p_0(a), ..., p_{K}(a) where symbols[k] = p_k; each value must lie in A.
std::vector<AElem> rho_from_symbols(const std::vector<AddPoly>& symbols, const AElem& a);

struct RhoTableEntry {
  AElem a;
  /// rho_{a,0}, ..., rho_{a,deg a}.
  std::vector<AElem> coeffs;
};

/// For every a in A_{<max_deg+1}: rho_recursive, rho_compose and the
/// symbols p_k(a), k = 0..max_deg, agree (zero beyond deg a). Throws
/// VerificationFailure naming a and k on the first disagreement.
std::vector<RhoTableEntry> rho_coefficient_table(int max_deg);

struct FunctionalTerm {
  int index = 0;
  /// a^(2^n) a_n, the z^(2^n) coefficient of e(az).
  KElem lhs;
  /// sum_i rho_{a,i} a_{n-i}^(2^i), the same coefficient of rho_a(e(z)).
  KElem rhs;
};

/// Both sides of e(az) = rho_a(e(z)) for 0 <= n <= order. The caller compares.
std::vector<FunctionalTerm> functional_equation_terms(const AElem& a, int order);

}  // namespace drinfeld

#endif  // DRINFELD_DRINFELD_HPP
