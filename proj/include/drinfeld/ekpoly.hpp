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

#ifndef DRINFELD_EKPOLY_HPP
#define DRINFELD_EKPOLY_HPP

// The vanishing polynomials e_k(w) = prod_{a in A_{<k}} (w + a), the
// products D_k = e_k(t_k) of all elements of degree k, and the identities
// tying them to the exponential and logarithm coefficients d_k, l_k.
//
// e_k is additive with k coefficients B_{k,0..k-1}; in the basis of
// powers of [1]_w = w^2 + w its coefficients are T_{k,0..k-2}.

#include <span>
#include <vector>

#include "drinfeld/additive.hpp"
#include "drinfeld/curve_ring.hpp"

namespace drinfeld {

inline constexpr int kDefaultBruteBudget = 10;

/// w^(2^k) + w.
KElem bracket_w(unsigned k, const KElem& w);

/// e_2 .. e_{kmax+1} and D_2 .. D_kmax from e_k = e_{k-1}^2 + D_{k-1} e_{k-1}.
struct EkChain {
  int kmax = 0;
  /// B[k] = (B_{k,0}, ..., B_{k,k-1}) for 2 <= k <= kmax + 1; lower slots empty.
  std::vector<std::vector<AElem>> B;
  /// D[k] for 2 <= k <= kmax; lower slots zero.
  std::vector<AElem> D;

  AddPoly e(int k) const;
};

/// Throws BudgetError for kmax < 2.
EkChain ek_chain(int kmax);

/// Literal expansion of prod_{a in A_{<k}} (w + a); checks that only
/// 2-power exponents survive. Throws BudgetError outside 1 <= k <= budget.
AddPoly ek_bruteforce(int k, int budget = kDefaultBruteBudget);

/// e_k via the squaring recursion seeded with e_2 = w^2 + w. k >= 2.
AddPoly ek_recursive(int k);

enum class DkMode { kEval, kBrute };

/// kEval: e_k(t_k). kBrute: product over A_k (k <= budget).
/// Throws BudgetError for k < 2.
AElem Dk(int k, DkMode mode, int budget = kDefaultBruteBudget);

/// B_{k,0}, ..., B_{k,k-1}. k >= 2.
std::vector<AElem> B_coeffs(int k);

/// S_{n,r}(x_1..x_n) = sum over n >= i_1 > ... > i_r >= 1 of
/// prod_j x_{i_j}^(2^(n-j+1-i_j)). values[i-1] holds x_i.
KElem S_sym_direct(int n, int r, std::span<const KElem> values);
/// Same value from S_{m+1,r} = S_{m,r}^2 + x_{m+1} S_{m,r-1}.
KElem S_sym_recursive(int n, int r, std::span<const KElem> values);
/// Both routes; throws VerificationFailure when they differ.
KElem S_sym(int n, int r, std::span<const KElem> values);

/// T_{k,i} = S_{k-2,k-2-i}(D_2, ..., D_{k-1}). Validated against the
/// T recursion and against ek_recursive(k). 2 <= k <= budget.
OneBasisPoly T_coeffs(int k, int budget = kDefaultBruteBudget);

/// B_i = T_i + T_{i-1}.
AddPoly basis_convert(const OneBasisPoly& p);
/// Inverse of basis_convert; throws std::invalid_argument when p is not a
/// polynomial in [1]_w.
OneBasisPoly basis_invert(const AddPoly& p);

struct DivisionResult {
  int k = 0;
  /// e_k / d_k: the non-constant part of R_k = p_k / e_k.
  AddPoly quotient;
  /// 1/d_{k-1} + B_{k,k-2}^2 / d_k.
  KElem C;
  /// 1/D_k + D_k/d_k.
  KElem C_from_D;
};

/// Checks p_k = e_k^2/d_k + C e_k coefficientwise and that both
/// expressions for C agree. Throws VerificationFailure naming k and the
/// exponent index. 2 <= k <= 12.
DivisionResult division_theorem_check(int k);

struct MainTheoremRow {
  int k = 0;
  KElem d;
  KElem ell;
  AElem D;
};

/// d_k and l_k rebuilt from D_2..D_k alone (seed d_2 = D_2), compared
/// with the exponential/logarithm recursions; the multiplier
/// 1 + D_k + D_{k-1}^2 + ... + D_2^(2^(k-2)) is compared with B_{k+1,k-1}.
/// Throws VerificationFailure naming k and the quantity. kmax >= 2.
std::vector<MainTheoremRow> main_theorem_table(int kmax);

}  // namespace drinfeld

#endif  // DRINFELD_EKPOLY_HPP
