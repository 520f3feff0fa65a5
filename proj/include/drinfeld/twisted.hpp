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

#ifndef DRINFELD_TWISTED_HPP
#define DRINFELD_TWISTED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "drinfeld/curve_ring.hpp"

namespace drinfeld {

/// Element of the skew ring K{tau} with tau * c = c^2 * tau.
/// Coefficient i multiplies tau^i; trailing zeros are trimmed.
class TwistedPoly {
 public:
  TwistedPoly() = default;
  explicit TwistedPoly(std::vector<KElem> coeffs);
  static TwistedPoly constant(KElem c);
  /// tau^n.
  static TwistedPoly tau(std::size_t n = 1);

  const std::vector<KElem>& coeffs() const { return coeffs_; }
  /// Zero beyond the stored range.
  KElem coefficient(std::size_t i) const;
  Degree tau_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Every coefficient has denominator 1.
  bool in_ring() const;

  TwistedPoly& operator+=(const TwistedPoly& o);
  friend TwistedPoly operator+(TwistedPoly a, const TwistedPoly& b) { return a += b; }
  friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);
  TwistedPoly& operator*=(const TwistedPoly& o) { return *this = *this * o; }

  /// sum_i c_i z^(2^i).
  KElem apply(const KElem& z) const;

  bool operator==(const TwistedPoly&) const = default;

  /// "(x) + (x^2+x)*t + (1)*t^2"; zero coefficients are skipped.
  std::string to_string() const;

 private:
  void trim();
  std::vector<KElem> coeffs_;
};

}  // namespace drinfeld

#endif  // DRINFELD_TWISTED_HPP
