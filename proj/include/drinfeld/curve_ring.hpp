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

#ifndef DRINFELD_CURVE_RING_HPP
#define DRINFELD_CURVE_RING_HPP

// The coordinate ring A = F2[x,y]/(y^2 + y + x^3 + x + 1) and its fraction
// field K. A is a free F2[x]-module on {1, y}; K elements keep their
// denominator in F2[x] (inversion goes through the norm, which clears y).

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drinfeld/f2poly.hpp"

namespace drinfeld {

/// x^3 + x + 1, the value of y^2 + y on the curve.
const BinaryPoly& curve_constant();

/// f(x) + g(x)*y.
class AElem {
 public:
  AElem() = default;
  AElem(BinaryPoly f, BinaryPoly g) : f_(std::move(f)), g_(std::move(g)) {}
  static AElem from_poly(BinaryPoly f) { return AElem(std::move(f), BinaryPoly{}); }

  static AElem zero() { return {}; }
  static AElem one() { return from_poly(BinaryPoly::one()); }
  static AElem x() { return from_poly(BinaryPoly::monomial(1)); }
  static AElem y() { return AElem(BinaryPoly{}, BinaryPoly::one()); }

  const BinaryPoly& f() const { return f_; }
  const BinaryPoly& g() const { return g_; }

  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }
  bool is_one() const { return f_.is_one() && g_.is_zero(); }

  /// max(2 deg f, 3 + 2 deg g); the two candidates have opposite parity.
  Degree degree() const;

  /// Image under y -> y + 1.
  AElem conjugate() const { return AElem(f_ + g_, g_); }
  /// f^2 + f g + g^2 (x^3 + x + 1) = a * conjugate(a).
  BinaryPoly norm() const;
  /// gcd(f, g); zero for the zero element.
  BinaryPoly content() const;

  AElem square() const;
  /// a^(2^n).
  AElem frobenius(unsigned n) const;

  AElem& operator+=(const AElem& o);
  friend AElem operator+(AElem a, const AElem& b) { return a += b; }
  friend AElem operator-(AElem a, const AElem& b) { return a += b; }
  friend AElem operator*(const AElem& a, const AElem& b);
  AElem& operator*=(const AElem& o) { return *this = *this * o; }
  AElem scaled(const BinaryPoly& c) const { return AElem(f_ * c, g_ * c); }

  /// Divides both components by c, nullopt when c does not divide.
  std::optional<AElem> divide_exact(const BinaryPoly& c) const;

  bool operator==(const AElem&) const = default;
  std::strong_ordering operator<=>(const AElem& o) const;

  /// Terms in descending degree, e.g. "x^3+x*y+1".
  std::string to_string() const;
  /// Any expression of the element grammar that lands in A. Throws ParseError.
  static AElem parse(std::string_view text);

 private:
  BinaryPoly f_;
  BinaryPoly g_;
};

/// (f + g y) / h, h in F2[x] nonzero, gcd(f, g, h) = 1.
class KElem {
 public:
  KElem() : den_(BinaryPoly::one()) {}
  KElem(AElem a) : num_(std::move(a)), den_(BinaryPoly::one()) {}  // NOLINT: A embeds in K
  /// Reduces to canonical form. Throws ArithmeticError when den = 0.
  static KElem fraction(AElem num, BinaryPoly den);

  static KElem zero() { return {}; }
  static KElem one() { return KElem(AElem::one()); }

  const AElem& numerator() const { return num_; }
  const BinaryPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool in_ring() const { return den_.is_one(); }
  /// The element as an AElem; throws ConsistencyError when the denominator is not 1.
  AElem to_ring() const;

  /// Throws ArithmeticError on zero.
  KElem inverse() const;
  KElem square() const;
  KElem frobenius(unsigned n) const;

  KElem& operator+=(const KElem& o);
  friend KElem operator+(KElem a, const KElem& b) { return a += b; }
  friend KElem operator-(KElem a, const KElem& b) { return a += b; }
  friend KElem operator*(const KElem& a, const KElem& b);
  KElem& operator*=(const KElem& o) { return *this = *this * o; }
  /// Throws ArithmeticError when b = 0.
  friend KElem operator/(const KElem& a, const KElem& b);

  bool operator==(const KElem&) const = default;

  /// "(x^2+x)/(x^2+x+1)"; elements of A render as AElem does.
  std::string to_string() const;
  /// Sums, products, quotients and powers over {x, y}. Throws ParseError.
  static KElem parse(std::string_view text);

 private:
  KElem(AElem num, BinaryPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  AElem num_;
  BinaryPoly den_;
};

/// [j]_x = x^(2^j) + x.
AElem bracket_x(unsigned j);

/// x^(k/2) for even k, y x^((k-3)/2) for odd k. Throws BudgetError for k < 2.
AElem t_elem(int k);

/// (1, t_2, ..., t_{k-1}): the F2-basis of A_{<k}. Empty for k <= 0.
std::vector<AElem> degree_basis(int k);

enum class EnumMode { kBelow, kExact };

/// kBelow: all of A_{<k}; kExact: all of A_k = t_k + A_{<k}.
/// Order: element number m has basis coordinate i equal to bit i of m.
std::vector<AElem> enumerate(int k, EnumMode mode);

}  // namespace drinfeld

#endif  // DRINFELD_CURVE_RING_HPP
