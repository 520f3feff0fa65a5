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

#ifndef DRINFELD_F2POLY_HPP
#define DRINFELD_F2POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drinfeld {

/// Degree of a polynomial or ring element. The zero element has degree
/// NEG_INF, which is not a number: it compares below every finite degree,
/// absorbs addition, and refuses to convert to an integer.
class Degree {
 public:
  constexpr explicit Degree(std::int64_t value) : value_(value) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }

  /// Throws ArithmeticError for NEG_INF.
  std::int64_t value() const;

  // std::optional orders nullopt below every engaged value.
  constexpr auto operator<=>(const Degree&) const = default;
  constexpr bool operator==(const Degree&) const = default;

  friend constexpr bool operator==(const Degree& d, std::int64_t v) {
    return d.value_ == v;
  }

  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return Degree();
    return Degree(*a.value_ + *b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Degree() = default;
  std::optional<std::int64_t> value_;
};

/// Polynomial over F2 in one variable, packed 64 coefficients per word
/// (bit i of word j is the coefficient of the (64j+i)-th power).
/// Canonical form: the last stored word is nonzero, or there are none.
class BinaryPoly {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryPoly() = default;

  static BinaryPoly zero() { return {}; }
  static BinaryPoly one() { return monomial(0); }
  static BinaryPoly monomial(std::size_t exponent);
  static BinaryPoly from_words(std::vector<Word> words);
  /// Sum of the given powers; repeated exponents cancel.
  static BinaryPoly from_exponents(std::initializer_list<std::size_t> exponents);
  /// Low 64 coefficients given as a bit mask.
  static BinaryPoly from_mask(std::uint64_t mask);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  Degree degree() const;
  bool coefficient(std::size_t i) const;
  std::size_t term_count() const;
  std::span<const Word> words() const { return words_; }

  BinaryPoly& operator+=(const BinaryPoly& other);
  BinaryPoly& operator*=(const BinaryPoly& other);

  friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a += b; }
  friend BinaryPoly operator-(BinaryPoly a, const BinaryPoly& b) { return a += b; }
  friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);

  BinaryPoly square() const;
  /// p^(2^n).
  BinaryPoly frobenius(unsigned n) const;
  /// p * x^n.
  BinaryPoly shifted(std::size_t n) const;

  bool operator==(const BinaryPoly&) const = default;
  /// Arbitrary but total order, for use as an ordered-container key.
  std::strong_ordering operator<=>(const BinaryPoly& other) const;

  /// Descending powers, e.g. "x^4+x", "1", "0".
  std::string to_string(char var = 'x') const;
  /// Accepts to_string output plus optional '*' between a 0/1 coefficient
  /// and a power, and whitespace. Throws ParseError.
  static BinaryPoly parse(std::string_view text, char var = 'x');

 private:
  explicit BinaryPoly(std::vector<Word> words);
  void trim();

  std::vector<Word> words_;
};

struct DivRem {
  BinaryPoly quotient;
  BinaryPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws ArithmeticError when b = 0.
DivRem divrem(const BinaryPoly& a, const BinaryPoly& b);
BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b);

/// Monic gcd. gcd(0, 0) throws ArithmeticError.
BinaryPoly gcd(const BinaryPoly& a, const BinaryPoly& b);

/// a / b when b divides a, nullopt otherwise. Throws ArithmeticError when b = 0.
std::optional<BinaryPoly> divide_exact(const BinaryPoly& a, const BinaryPoly& b);

}  // namespace drinfeld

#endif  // DRINFELD_F2POLY_HPP
