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

#include "drinfeld/curve_ring.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "drinfeld/errors.hpp"

namespace drinfeld {

const BinaryPoly& curve_constant() {
  static const BinaryPoly c = BinaryPoly::from_exponents({3, 1, 0});
  return c;
}

// ---------------------------------------------------------------------------
// AElem

Degree AElem::degree() const {
  const Degree from_f = f_.is_zero() ? Degree::neg_inf() : Degree(2 * f_.degree().value());
  const Degree from_g = g_.is_zero() ? Degree::neg_inf() : Degree(3 + 2 * g_.degree().value());
  return std::max(from_f, from_g);
}

BinaryPoly AElem::norm() const { return f_.square() + f_ * g_ + g_.square() * curve_constant(); }

BinaryPoly AElem::content() const {
  if (is_zero()) return {};
  return gcd(f_, g_);
}

AElem AElem::square() const {
  // (f + g y)^2 = f^2 + g^2 (y + c) = (f^2 + g^2 c) + g^2 y
  BinaryPoly g2 = g_.square();
  BinaryPoly f2 = f_.square() + g2 * curve_constant();
  return AElem(std::move(f2), std::move(g2));
}

AElem AElem::frobenius(unsigned n) const {
  AElem a = *this;
  for (unsigned i = 0; i < n; ++i) a = a.square();
  return a;
}

AElem& AElem::operator+=(const AElem& o) {
  f_ += o.f_;
  g_ += o.g_;
  return *this;
}

AElem operator*(const AElem& a, const AElem& b) {
  if (a.g_.is_zero() && b.g_.is_zero()) return AElem::from_poly(a.f_ * b.f_);
  if (a.g_.is_zero()) return b.scaled(a.f_);
  if (b.g_.is_zero()) return a.scaled(b.f_);
  // (f1 + g1 y)(f2 + g2 y) = f1 f2 + g1 g2 c + (f1 g2 + f2 g1 + g1 g2) y
  BinaryPoly gg = a.g_ * b.g_;
  BinaryPoly f = a.f_ * b.f_ + gg * curve_constant();
  BinaryPoly g = a.f_ * b.g_ + b.f_ * a.g_ + gg;
  return AElem(std::move(f), std::move(g));
}

std::optional<AElem> AElem::divide_exact(const BinaryPoly& c) const {
  auto f = drinfeld::divide_exact(f_, c);
  if (!f) return std::nullopt;
  auto g = drinfeld::divide_exact(g_, c);
  if (!g) return std::nullopt;
  return AElem(std::move(*f), std::move(*g));
}

std::strong_ordering AElem::operator<=>(const AElem& o) const {
  if (auto c = g_ <=> o.g_; c != 0) return c;
  return f_ <=> o.f_;
}

std::string AElem::to_string() const {
  if (is_zero()) return "0";
  struct Term {
    std::int64_t degree;
    std::string text;
  };
  std::vector<Term> terms;
  auto x_power = [](std::size_t i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return "x";
    return "x^" + std::to_string(i);
  };
  if (!f_.is_zero()) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f_.degree().value()); ++i) {
      if (f_.coefficient(i)) {
        terms.push_back({static_cast<std::int64_t>(2 * i), i == 0 ? std::string("1") : x_power(i)});
      }
    }
  }
  if (!g_.is_zero()) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(g_.degree().value()); ++i) {
      if (g_.coefficient(i)) {
        terms.push_back({static_cast<std::int64_t>(2 * i + 3), i == 0 ? std::string("y") : x_power(i) + "*y"});
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.degree > b.degree; });
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += '+';
    out += t.text;
  }
  return out;
}

AElem AElem::parse(std::string_view text) {
  KElem k = KElem::parse(text);
  if (!k.in_ring()) throw ParseError("\"" + std::string(text) + "\" is not an element of A");
  return k.numerator();
}

// ---------------------------------------------------------------------------
// KElem

KElem KElem::fraction(AElem num, BinaryPoly den) {
  if (den.is_zero()) throw ArithmeticError("zero denominator");
  KElem k(std::move(num), std::move(den));
  k.reduce();
  return k;
}

void KElem::reduce() {
  if (den_.is_one()) return;
  if (num_.is_zero()) {
    den_ = BinaryPoly::one();
    return;
  }
  BinaryPoly c = gcd(den_, num_.f());
  if (!c.is_one()) c = gcd(c, num_.g());
  if (c.is_one()) return;
  num_ = *num_.divide_exact(c);
  den_ = *drinfeld::divide_exact(den_, c);
}

AElem KElem::to_ring() const {
  if (!den_.is_one()) throw ConsistencyError("element " + to_string() + " is not in A");
  return num_;
}

KElem KElem::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  // 1 / ((f + g y)/h) = h (f + g + g y) / N(f + g y)
  return fraction(num_.conjugate().scaled(den_), num_.norm());
}

KElem KElem::square() const {
  // Squaring keeps the numerator content coprime to the denominator.
  return KElem(num_.square(), den_.square());
}

KElem KElem::frobenius(unsigned n) const {
  return KElem(num_.frobenius(n), den_.frobenius(n));
}

KElem& KElem::operator+=(const KElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  const BinaryPoly d = gcd(den_, o.den_);
  if (d.is_one()) {
    num_ = num_.scaled(o.den_) + o.num_.scaled(den_);
    den_ = den_ * o.den_;
    return *this;
  }
  const BinaryPoly h1 = *drinfeld::divide_exact(den_, d);
  const BinaryPoly h2 = *drinfeld::divide_exact(o.den_, d);
  AElem t = num_.scaled(h2) + o.num_.scaled(h1);
  if (t.is_zero()) return *this = KElem();
  BinaryPoly e = gcd(d, t.f());
  if (!e.is_one()) e = gcd(e, t.g());
  num_ = e.is_one() ? std::move(t) : *t.divide_exact(e);
  den_ = h1 * (e.is_one() ? o.den_ : *drinfeld::divide_exact(o.den_, e));
  return *this;
}

KElem operator*(const KElem& a, const KElem& b) {
  if (a.is_zero() || b.is_zero()) return KElem();
  if (a.den_.is_one() && b.den_.is_one()) return KElem(a.num_ * b.num_);
  return KElem::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

KElem operator/(const KElem& a, const KElem& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero in K");
  return a * b.inverse();
}

std::string KElem::to_string() const {
  std::string num = num_.to_string();
  if (den_.is_one()) return num;
  std::string den = den_.to_string();
  if (num.find('+') != std::string::npos) num = "(" + num + ")";
  if (den.find('+') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := base ('^' digits)?
// base   := 'x' | 'y' | digits | '(' expr ')'
class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : original_(text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  KElem parse() {
    if (s_.empty()) fail("empty expression");
    KElem v = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(original_) + "\"");
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  KElem expr() {
    KElem v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      ++pos_;
      v += term();
    }
    return v;
  }

  KElem term() {
    KElem v = factor();
    while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
      const char op = s_[pos_++];
      KElem rhs = factor();
      if (op == '*') {
        v *= rhs;
      } else {
        if (rhs.is_zero()) fail("division by zero");
        v = v / rhs;
      }
    }
    return v;
  }

  KElem factor() {
    KElem b = base();
    if (!eat('^')) return b;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 9) fail("exponent too large");
    unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    KElem result = KElem::one();
    while (e != 0) {
      if (e & 1u) result *= b;
      e >>= 1;
      if (e != 0) b = b.square();
    }
    return result;
  }

  KElem base() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return AElem::x();
    }
    if (c == 'y') {
      ++pos_;
      return AElem::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Integers reduce mod 2.
      unsigned parity = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        parity = static_cast<unsigned>(s_[pos_] - '0') & 1u;
        ++pos_;
      }
      return parity != 0 ? KElem::one() : KElem::zero();
    }
    if (eat('(')) {
      KElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected character");
  }

  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

KElem KElem::parse(std::string_view text) { return ElementParser(text).parse(); }

// ---------------------------------------------------------------------------

AElem bracket_x(unsigned j) {
  return AElem::from_poly(BinaryPoly::monomial(std::size_t{1} << j) + BinaryPoly::monomial(1));
}

AElem t_elem(int k) {
  if (k < 2) throw BudgetError("t_k is defined for k >= 2, got k = " + std::to_string(k));
  if (k % 2 == 0) return AElem::from_poly(BinaryPoly::monomial(static_cast<std::size_t>(k / 2)));
  return AElem(BinaryPoly{}, BinaryPoly::monomial(static_cast<std::size_t>((k - 3) / 2)));
}

std::vector<AElem> degree_basis(int k) {
  std::vector<AElem> basis;
  if (k >= 1) basis.push_back(AElem::one());
  for (int j = 2; j < k; ++j) basis.push_back(t_elem(j));
  return basis;
}

std::vector<AElem> enumerate(int k, EnumMode mode) {
  if (mode == EnumMode::kExact) {
    if (k == 0) return {AElem::one()};
    if (k < 2) return {};
  }
  const std::vector<AElem> basis = degree_basis(k);
  if (basis.size() > 30) throw BudgetError("enumeration of more than 2^30 elements");
  const std::size_t count = std::size_t{1} << basis.size();
  const AElem offset = mode == EnumMode::kExact ? t_elem(k) : AElem::zero();
  std::vector<AElem> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    AElem a = offset;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (m >> i & 1u) a += basis[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace drinfeld
