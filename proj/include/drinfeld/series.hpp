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

#ifndef DRINFELD_SERIES_HPP
#define DRINFELD_SERIES_HPP

// Truncated additive series sum_{i<=K} c_i z^(2^i): the exponential
// e(z) = sum z^(2^i)/d_i and logarithm log(z) = sum z^(2^i)/l_i of the
// Drinfeld module, both obtained from the functional equation for rho_x.

#include <cstddef>
#include <span>
#include <vector>

#include "drinfeld/additive.hpp"
#include "drinfeld/curve_ring.hpp"

namespace drinfeld {

enum class SeriesKind { kExponential, kLogarithm, kGeneric };

class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::vector<KElem> coeffs, SeriesKind kind = SeriesKind::kGeneric)
      : coeffs_(std::move(coeffs)), kind_(kind) {}

  const std::vector<KElem>& coeffs() const { return coeffs_; }
  const KElem& operator[](std::size_t i) const { return coeffs_.at(i); }
  /// Truncation order K: the last stored index.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  SeriesKind kind() const { return kind_; }

  /// Value of the truncated series at z.
  KElem evaluate(const KElem& z) const;

  /// Coefficients only; the kind tag is not compared.
  bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<KElem> coeffs_;
  SeriesKind kind_ = SeriesKind::kGeneric;
};

/// a_0 = 1, a_1 = a_0^2, a_j = ([1]_x a_{j-1}^2 + a_{j-2}^4) / [j]_x.
QSeries exp_coeffs(int order);
/// b_0 = 1, b_1 = b_0, b_j = ([1]_x^(2^(j-1)) b_{j-1} + b_{j-2}) / [j]_x.
QSeries log_coeffs(int order);

/// d_0..d_K from their own recursion; each d_j is checked against 1/a_j.
/// Throws VerificationFailure on mismatch.
std::vector<KElem> d_seq(int order);
/// l_0..l_K from their own recursion; each l_j is checked against 1/b_j.
std::vector<KElem> ell_seq(int order);

/// Reruns the exponential or logarithm recursion from initial term c0
/// (un-normalised series). Throws ArithmeticError for c0 = 0 and
/// std::invalid_argument for a generic series.
QSeries scale_series(const QSeries& s, const KElem& c0);

/// Coefficients 0..K of outer(a * inner(z)):
///   sum_{j<=k} outer_j a^(2^j) inner_{k-j}^(2^j).
/// Throws BudgetError when either series is shorter than K.
QSeries compose_scaled(const QSeries& outer, const AElem& a, const QSeries& inner, int order);

/// p_k(w) = sum_{j<=k} w^(2^j) / (d_j l_{k-j}^(2^j)).
/// d and ell must reach index k.
AddPoly pk_symbol(int k, std::span<const KElem> d, std::span<const KElem> ell);

}  // namespace drinfeld

#endif  // DRINFELD_SERIES_HPP
