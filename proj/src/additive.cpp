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

#include "drinfeld/additive.hpp"

#include <utility>

namespace drinfeld {

AddPoly::AddPoly(std::vector<KElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void AddPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KElem AddPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : KElem{}; }

Degree AddPoly::top_index() const {
  if (coeffs_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(coeffs_.size() - 1));
}

bool AddPoly::in_ring() const {
  for (const KElem& c : coeffs_) {
    if (!c.in_ring()) return false;
  }
  return true;
}

KElem AddPoly::evaluate(const KElem& w) const {
  KElem acc;
  KElem power = w;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.square();
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * power;
  }
  return acc;
}

AddPoly AddPoly::square() const {
  if (coeffs_.empty()) return {};
  std::vector<KElem> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i].square();
  return AddPoly(std::move(out));
}

AddPoly AddPoly::scaled(const KElem& c) const {
  std::vector<KElem> out;
  out.reserve(coeffs_.size());
  for (const KElem& x : coeffs_) out.push_back(x * c);
  return AddPoly(std::move(out));
}

AddPoly& AddPoly::operator+=(const AddPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

std::string AddPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")*w";
    if (i > 0) out += "^" + std::to_string(std::size_t{1} << i);
  }
  return out;
}

KElem OneBasisPoly::evaluate(const KElem& w) const {
  KElem acc;
  KElem power = w.square() + w;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.square();
    acc += coeffs_[i] * power;
  }
  return acc;
}

}  // namespace drinfeld
