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

#include "drinfeld/twisted.hpp"

#include <utility>

namespace drinfeld {

TwistedPoly::TwistedPoly(std::vector<KElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TwistedPoly TwistedPoly::constant(KElem c) { return TwistedPoly(std::vector<KElem>{std::move(c)}); }

TwistedPoly TwistedPoly::tau(std::size_t n) {
  std::vector<KElem> c(n + 1);
  c[n] = KElem::one();
  return TwistedPoly(std::move(c));
}

void TwistedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KElem TwistedPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : KElem{}; }

Degree TwistedPoly::tau_degree() const {
  if (coeffs_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(coeffs_.size() - 1));
}

bool TwistedPoly::in_ring() const {
  for (const KElem& c : coeffs_) {
    if (!c.in_ring()) return false;
  }
  return true;
}

TwistedPoly& TwistedPoly::operator+=(const TwistedPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // (c tau^i)(d tau^j) = c d^(2^i) tau^(i+j)
  std::vector<KElem> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  std::vector<KElem> twisted_b = b.coeffs_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (i > 0) {
      for (KElem& d : twisted_b) d = d.square();
    }
    const KElem& c = a.coeffs_[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < twisted_b.size(); ++j) out[i + j] += c * twisted_b[j];
  }
  return TwistedPoly(std::move(out));
}

KElem TwistedPoly::apply(const KElem& z) const {
  KElem acc;
  KElem power = z;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.square();
    acc += coeffs_[i] * power;
  }
  return acc;
}

std::string TwistedPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) out += "*t";
    if (i > 1) out += "*t^" + std::to_string(i);
  }
  return out;
}

}  // namespace drinfeld
