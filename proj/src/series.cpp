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

#include "drinfeld/series.hpp"

#include <stdexcept>
#include <string>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

void require_order(int order) {
  if (order < 0) throw BudgetError("truncation order must be >= 0, got " + std::to_string(order));
}

// Both recursions are seeded with c0 in slot 0 and differ only in the step.
std::vector<KElem> run_exp_recursion(const KElem& c0, int order) {
  std::vector<KElem> a{c0};
  if (order >= 1) a.push_back(c0.square());
  const KElem one_x = bracket_x(1);
  for (int j = 2; j <= order; ++j) {
    const KElem num = one_x * a[j - 1].square() + a[j - 2].frobenius(2);
    a.push_back(num / KElem(bracket_x(static_cast<unsigned>(j))));
  }
  return a;
}

std::vector<KElem> run_log_recursion(const KElem& c0, int order) {
  std::vector<KElem> b{c0};
  if (order >= 1) b.push_back(c0);
  const AElem one_x = bracket_x(1);
  for (int j = 2; j <= order; ++j) {
    const KElem num = KElem(one_x.frobenius(static_cast<unsigned>(j - 1))) * b[j - 1] + b[j - 2];
    b.push_back(num / KElem(bracket_x(static_cast<unsigned>(j))));
  }
  return b;
}

}  // namespace

KElem QSeries::evaluate(const KElem& z) const {
  KElem acc;
  KElem power = z;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.square();
    acc += coeffs_[i] * power;
  }
  return acc;
}

QSeries exp_coeffs(int order) {
  require_order(order);
  return QSeries(run_exp_recursion(KElem::one(), order), SeriesKind::kExponential);
}

QSeries log_coeffs(int order) {
  require_order(order);
  return QSeries(run_log_recursion(KElem::one(), order), SeriesKind::kLogarithm);
}

std::vector<KElem> d_seq(int order) {
  require_order(order);
  std::vector<KElem> d{KElem::one()};
  if (order >= 1) d.push_back(KElem::one());
  const KElem one_x = bracket_x(1);
  for (int j = 2; j <= order; ++j) {
    const KElem prev2 = d[j - 1].square();
    const KElem prev4 = d[j - 2].frobenius(2);
    const KElem num = KElem(bracket_x(static_cast<unsigned>(j))) * prev2 * prev4;
    d.push_back(num / (one_x * prev4 + prev2));
  }
  const QSeries a = exp_coeffs(order);
  for (int j = 0; j <= order; ++j) {
    if (!(d[j] * a[j]).is_one()) {
      throw VerificationFailure("d_" + std::to_string(j) + " * a_" + std::to_string(j) + " != 1: d = " +
                                d[j].to_string() + ", a = " + a[j].to_string());
    }
  }
  return d;
}

std::vector<KElem> ell_seq(int order) {
  require_order(order);
  std::vector<KElem> ell{KElem::one()};
  if (order >= 1) ell.push_back(KElem::one());
  const AElem one_x = bracket_x(1);
  for (int j = 2; j <= order; ++j) {
    const KElem num = KElem(bracket_x(static_cast<unsigned>(j))) * ell[j - 1] * ell[j - 2];
    const KElem den = KElem(one_x.frobenius(static_cast<unsigned>(j - 1))) * ell[j - 2] + ell[j - 1];
    ell.push_back(num / den);
  }
  const QSeries b = log_coeffs(order);
  for (int j = 0; j <= order; ++j) {
    if (!(ell[j] * b[j]).is_one()) {
      throw VerificationFailure("l_" + std::to_string(j) + " * b_" + std::to_string(j) + " != 1: l = " +
                                ell[j].to_string() + ", b = " + b[j].to_string());
    }
  }
  return ell;
}

QSeries scale_series(const QSeries& s, const KElem& c0) {
  if (c0.is_zero()) throw ArithmeticError("initial term of a scaled series must be nonzero");
  switch (s.kind()) {
    case SeriesKind::kExponential:
      return QSeries(run_exp_recursion(c0, s.order()), SeriesKind::kGeneric);
    case SeriesKind::kLogarithm:
      return QSeries(run_log_recursion(c0, s.order()), SeriesKind::kGeneric);
    case SeriesKind::kGeneric:
      break;
  }
  throw std::invalid_argument("scale_series needs an exponential or logarithm series");
}

QSeries compose_scaled(const QSeries& outer, const AElem& a, const QSeries& inner, int order) {
  require_order(order);
  if (outer.order() < order || inner.order() < order) {
    throw BudgetError("compose_scaled: series truncated below order " + std::to_string(order));
  }
  std::vector<AElem> a_pow{a};
  for (int j = 1; j <= order; ++j) a_pow.push_back(a_pow.back().square());
  // inner_pow[j][i] = inner_i^(2^j), built one Frobenius layer at a time.
  std::vector<KElem> layer = inner.coeffs();
  layer.resize(static_cast<std::size_t>(order) + 1);
  std::vector<KElem> out(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    if (j > 0) {
      for (int i = 0; i <= order - j; ++i) layer[i] = layer[i].square();
    }
    const KElem scale = outer[j] * KElem(a_pow[j]);
    if (scale.is_zero()) continue;
    for (int k = j; k <= order; ++k) out[k] += scale * layer[k - j];
  }
  return QSeries(std::move(out));
}

AddPoly pk_symbol(int k, std::span<const KElem> d, std::span<const KElem> ell) {
  if (k < 0 || d.size() <= static_cast<std::size_t>(k) || ell.size() <= static_cast<std::size_t>(k)) {
    throw BudgetError("pk_symbol: d and ell must reach index " + std::to_string(k));
  }
  std::vector<KElem> coeffs;
  for (int j = 0; j <= k; ++j) {
    coeffs.push_back((d[j] * ell[k - j].frobenius(static_cast<unsigned>(j))).inverse());
  }
  return AddPoly(std::move(coeffs));
}

}  // namespace drinfeld
