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

#include "drinfeld/ekpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "drinfeld/errors.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

namespace {

void require_k_at_least_2(int k, const char* what) {
  if (k < 2) throw BudgetError(std::string(what) + " is defined for k >= 2, got k = " + std::to_string(k));
}

AddPoly to_addpoly(const std::vector<AElem>& coeffs) {
  return AddPoly(std::vector<KElem>(coeffs.begin(), coeffs.end()));
}

AElem evaluate_in_ring(const std::vector<AElem>& coeffs, const AElem& w) {
  AElem acc;
  AElem power = w;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = power.square();
    acc += coeffs[i] * power;
  }
  return acc;
}

std::string index_pair(int k, int i) { return std::to_string(k) + "," + std::to_string(i); }

}  // namespace

KElem bracket_w(unsigned k, const KElem& w) { return w.frobenius(k) + w; }

AddPoly EkChain::e(int k) const {
  if (k < 2 || k > kmax + 1) throw BudgetError("e_" + std::to_string(k) + " is outside the chain");
  return to_addpoly(B[static_cast<std::size_t>(k)]);
}

EkChain ek_chain(int kmax) {
  require_k_at_least_2(kmax, "ek_chain");
  EkChain chain;
  chain.kmax = kmax;
  chain.B.resize(static_cast<std::size_t>(kmax) + 2);
  chain.D.resize(static_cast<std::size_t>(kmax) + 1);
  chain.B[2] = {AElem::one(), AElem::one()};
  for (int k = 2; k <= kmax; ++k) {
    const std::vector<AElem>& prev = chain.B[static_cast<std::size_t>(k)];
    const AElem D = evaluate_in_ring(prev, t_elem(k));
    // e_{k+1} = e_k^2 + D_k e_k
    std::vector<AElem> next(prev.size() + 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] += D * prev[i];
      next[i + 1] += prev[i].square();
    }
    chain.D[static_cast<std::size_t>(k)] = D;
    chain.B[static_cast<std::size_t>(k) + 1] = std::move(next);
  }
  return chain;
}

AddPoly ek_bruteforce(int k, int budget) {
  if (k < 1 || k > budget) {
    throw BudgetError("ek_bruteforce: k = " + std::to_string(k) + " outside 1.." + std::to_string(budget));
  }
  // Dense coefficients of prod (w + a), index = power of w.
  std::vector<AElem> dense{AElem::one()};
  for (const AElem& a : enumerate(k, EnumMode::kBelow)) {
    dense.emplace_back();
    for (std::size_t i = dense.size() - 1; i > 0; --i) dense[i] = dense[i - 1] + a * dense[i];
    dense[0] = a * dense[0];
  }
  std::vector<KElem> coeffs;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    const bool power_of_two = i != 0 && (i & (i - 1)) == 0;
    if (power_of_two) {
      coeffs.emplace_back(dense[i]);
    } else if (!dense[i].is_zero()) {
      throw VerificationFailure("e_" + std::to_string(k) + " has a nonzero coefficient at w^" + std::to_string(i));
    }
  }
  return AddPoly(std::move(coeffs));
}

AddPoly ek_recursive(int k) {
  require_k_at_least_2(k, "ek_recursive");
  if (k == 2) return to_addpoly({AElem::one(), AElem::one()});
  return ek_chain(k - 1).e(k);
}

AElem Dk(int k, DkMode mode, int budget) {
  require_k_at_least_2(k, "D_k");
  if (mode == DkMode::kEval) return ek_chain(k).D[static_cast<std::size_t>(k)];
  if (k > budget) {
    throw BudgetError("Dk brute force: k = " + std::to_string(k) + " exceeds budget " + std::to_string(budget));
  }
  AElem product = AElem::one();
  for (const AElem& a : enumerate(k, EnumMode::kExact)) product *= a;
  return product;
}

std::vector<AElem> B_coeffs(int k) {
  require_k_at_least_2(k, "B_coeffs");
  if (k == 2) return {AElem::one(), AElem::one()};
  return ek_chain(k - 1).B[static_cast<std::size_t>(k)];
}

KElem S_sym_direct(int n, int r, std::span<const KElem> values) {
  if (n < 0 || r < 0 || values.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("S_sym: need n >= 0, r >= 0 and exactly n values");
  }
  if (r > n) return KElem::zero();
  if (n > 20) throw BudgetError("S_sym_direct: n > 20");
  KElem sum;
  // Each r-subset of {1..n}, read in decreasing order, is one index tuple.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    KElem term = KElem::one();
    int j = 1;
    for (int i = n; i >= 1; --i) {
      if (!(mask >> (i - 1) & 1u)) continue;
      term *= values[static_cast<std::size_t>(i - 1)].frobenius(static_cast<unsigned>(n - j + 1 - i));
      ++j;
    }
    sum += term;
  }
  return sum;
}

KElem S_sym_recursive(int n, int r, std::span<const KElem> values) {
  if (n < 0 || r < 0 || values.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("S_sym: need n >= 0, r >= 0 and exactly n values");
  }
  if (r > n) return KElem::zero();
  // row[s] = S_{m,s} for the current m.
  std::vector<KElem> row(static_cast<std::size_t>(r) + 1);
  row[0] = KElem::one();
  for (int m = 0; m < n; ++m) {
    const KElem& x_next = values[static_cast<std::size_t>(m)];
    for (int s = std::min(r, m + 1); s >= 0; --s) {
      KElem v = row[static_cast<std::size_t>(s)].square();
      if (s > 0) v += x_next * row[static_cast<std::size_t>(s - 1)];
      row[static_cast<std::size_t>(s)] = std::move(v);
    }
  }
  return row[static_cast<std::size_t>(r)];
}

KElem S_sym(int n, int r, std::span<const KElem> values) {
  KElem direct = S_sym_direct(n, r, values);
  KElem rec = S_sym_recursive(n, r, values);
  if (direct != rec) {
    throw VerificationFailure("S_{" + index_pair(n, r) + "}: direct " + direct.to_string() + " vs recursive " +
                              rec.to_string());
  }
  return direct;
}

namespace {

std::vector<KElem> t_from_symmetric_sums(int k, const EkChain& chain) {
  std::vector<KElem> values;
  for (int j = 2; j <= k - 1; ++j) values.emplace_back(chain.D[static_cast<std::size_t>(j)]);
  std::vector<KElem> t;
  for (int i = 0; i <= k - 2; ++i) t.push_back(S_sym(k - 2, k - 2 - i, values));
  return t;
}

}  // namespace

OneBasisPoly T_coeffs(int k, int budget) {
  require_k_at_least_2(k, "T_coeffs");
  if (k > budget) throw BudgetError("T_coeffs: k = " + std::to_string(k) + " exceeds budget");
  const EkChain chain = ek_chain(std::max(k - 1, 2));
  const std::vector<KElem> t = t_from_symmetric_sums(k, chain);

  if (k >= 3) {
    // T_{k,i} = T_{k-1,i-1}^2 + D_{k-1} T_{k-1,i}
    const std::vector<KElem> prev = t_from_symmetric_sums(k - 1, chain);
    const KElem D(chain.D[static_cast<std::size_t>(k - 1)]);
    for (int i = 0; i <= k - 2; ++i) {
      KElem expect;
      if (i >= 1) expect += prev[static_cast<std::size_t>(i - 1)].square();
      if (i <= k - 3) expect += D * prev[static_cast<std::size_t>(i)];
      if (expect != t[static_cast<std::size_t>(i)]) {
        throw VerificationFailure("T_{" + index_pair(k, i) + "}: symmetric sum " +
                                  t[static_cast<std::size_t>(i)].to_string() + " vs recursion " + expect.to_string());
      }
    }
  }
  OneBasisPoly result(t);
  const AddPoly converted = basis_convert(result);
  const AddPoly e = chain.e(k);
  if (converted != e) {
    throw VerificationFailure("T_{" + std::to_string(k) + ",*} converts to " + converted.to_string() +
                              " but e_" + std::to_string(k) + " = " + e.to_string());
  }
  return result;
}

AddPoly basis_convert(const OneBasisPoly& p) {
  const std::vector<KElem>& t = p.coeffs();
  if (t.empty()) return {};
  std::vector<KElem> b(t.size() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    b[i] += t[i];
    b[i + 1] += t[i];
  }
  return AddPoly(std::move(b));
}

OneBasisPoly basis_invert(const AddPoly& p) {
  if (p.is_zero()) return {};
  const std::vector<KElem>& b = p.coeffs();
  const std::size_t top = b.size() - 1;
  if (top == 0) throw std::invalid_argument("basis_invert: " + p.to_string() + " is not a polynomial in [1]_w");
  std::vector<KElem> t(top);
  t[0] = b[0];
  for (std::size_t i = 1; i < top; ++i) t[i] = b[i] + t[i - 1];
  if (t[top - 1] != b[top]) {
    throw std::invalid_argument("basis_invert: " + p.to_string() + " is not a polynomial in [1]_w");
  }
  return OneBasisPoly(std::move(t));
}

DivisionResult division_theorem_check(int k) {
  require_k_at_least_2(k, "division_theorem_check");
  if (k > 12) throw BudgetError("division_theorem_check: k = " + std::to_string(k) + " exceeds 12");
  const std::vector<KElem> d = d_seq(k);
  const std::vector<KElem> ell = ell_seq(k);
  const EkChain chain = ek_chain(k);
  const AddPoly e = chain.e(k);
  const KElem D(chain.D[static_cast<std::size_t>(k)]);
  const KElem& dk = d[static_cast<std::size_t>(k)];
  const KElem inv_dk = dk.inverse();

  const KElem C = d[static_cast<std::size_t>(k - 1)].inverse() + e.coefficient(static_cast<std::size_t>(k - 2)).square() * inv_dk;
  const KElem C_from_D = D.inverse() + D * inv_dk;
  if (C != C_from_D) {
    throw VerificationFailure("k = " + std::to_string(k) + ": C = 1/d_{k-1} + B_{k,k-2}^2/d_k = " + C.to_string() +
                              " but 1/D_k + D_k/d_k = " + C_from_D.to_string());
  }

  const AddPoly p = pk_symbol(k, d, ell);
  const AddPoly rhs = e.square().scaled(inv_dk) + e.scaled(C);
  for (int i = 0; i <= k; ++i) {
    const KElem lhs_i = p.coefficient(static_cast<std::size_t>(i));
    const KElem rhs_i = rhs.coefficient(static_cast<std::size_t>(i));
    if (lhs_i != rhs_i) {
      throw VerificationFailure("k = " + std::to_string(k) + ", coefficient of w^(2^" + std::to_string(i) +
                                "): p_k has " + lhs_i.to_string() + ", e_k^2/d_k + C e_k has " + rhs_i.to_string());
    }
  }
  return {k, e.scaled(inv_dk), C, C_from_D};
}

std::vector<MainTheoremRow> main_theorem_table(int kmax) {
  require_k_at_least_2(kmax, "main_theorem_table");
  const std::vector<KElem> d = d_seq(kmax);
  const std::vector<KElem> ell = ell_seq(kmax);
  const EkChain chain = ek_chain(kmax);
  auto D_at = [&](int j) -> const AElem& { return chain.D[static_cast<std::size_t>(j)]; };

  auto fail = [](int k, const std::string& what, const std::string& lhs, const std::string& rhs) {
    throw VerificationFailure("k = " + std::to_string(k) + ": " + what + " from D-values is " + lhs +
                              " but the recursion gives " + rhs);
  };

  std::vector<MainTheoremRow> rows;
  KElem d_prev;
  AElem d_product = AElem::one();  // D_{k-1} ... D_2
  for (int k = 2; k <= kmax; ++k) {
    const AElem& Dk_val = D_at(k);
    // 1 + D_k + D_{k-1}^2 + ... + D_2^(2^(k-2))
    AElem multiplier = AElem::one() + Dk_val;
    for (int j = k - 1; j >= 2; --j) multiplier += D_at(j).frobenius(static_cast<unsigned>(k - j));
    const AElem& b_next = chain.B[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(k - 1)];
    if (multiplier != b_next) fail(k, "multiplier vs B_{k+1,k-1}", multiplier.to_string(), b_next.to_string());

    const KElem D(Dk_val);
    KElem dk;
    if (k == 2) {
      dk = D;
    } else {
      dk = D * d_prev / (d_prev + D) * KElem(multiplier);
    }
    if (dk != d[static_cast<std::size_t>(k)]) fail(k, "d_k", dk.to_string(), d[static_cast<std::size_t>(k)].to_string());

    const KElem lk = D * dk / ((dk + D.square()) * KElem(d_product));
    if (lk != ell[static_cast<std::size_t>(k)]) {
      fail(k, "ell_k", lk.to_string(), ell[static_cast<std::size_t>(k)].to_string());
    }

    rows.push_back({k, dk, lk, Dk_val});
    d_prev = dk;
    d_product *= Dk_val;
  }
  return rows;
}

}  // namespace drinfeld
