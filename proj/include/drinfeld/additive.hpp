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

#ifndef DRINFELD_ADDITIVE_HPP
#define DRINFELD_ADDITIVE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "drinfeld/curve_ring.hpp"

namespace drinfeld {

/// Additive polynomial sum_i c_i w^(2^i), stored by exponent index i.
/// Trailing zero coefficients are trimmed.
class AddPoly {
 public:
  AddPoly() = default;
  explicit AddPoly(std::vector<KElem> coeffs);

  const std::vector<KElem>& coeffs() const { return coeffs_; }
  KElem coefficient(std::size_t i) const;
  /// Index of the top nonzero coefficient (log2 of the w-degree).
  Degree top_index() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool in_ring() const;

  KElem evaluate(const KElem& w) const;
  /// P(w)^2 = sum c_i^2 w^(2^(i+1)).
  AddPoly square() const;
  AddPoly scaled(const KElem& c) const;

  AddPoly& operator+=(const AddPoly& o);
  friend AddPoly operator+(AddPoly a, const AddPoly& b) { return a += b; }

  bool operator==(const AddPoly&) const = default;

  /// "(c0)*w + (c1)*w^2 + (c2)*w^4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<KElem> coeffs_;
};

/// sum_i c_i ([1]_w)^(2^i) with [1]_w = w^2 + w.
class OneBasisPoly {
 public:
  OneBasisPoly() = default;
  explicit OneBasisPoly(std::vector<KElem> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<KElem>& coeffs() const { return coeffs_; }
  KElem coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : KElem{}; }
  KElem evaluate(const KElem& w) const;

  bool operator==(const OneBasisPoly&) const = default;

 private:
  std::vector<KElem> coeffs_;
};

}  // namespace drinfeld

#endif  // DRINFELD_ADDITIVE_HPP
