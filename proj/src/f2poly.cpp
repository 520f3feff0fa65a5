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

#include "drinfeld/f2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <utility>

#include "drinfeld/errors.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define DRINFELD_HAVE_CLMUL_DISPATCH 1
#endif

namespace drinfeld {

using Word = BinaryPoly::Word;

std::int64_t Degree::value() const {
  if (!value_) throw ArithmeticError("degree of the zero element is NEG_INF");
  return *value_;
}

std::string Degree::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("-inf");
}

namespace {

// 64x64 -> 128 carryless product with a 4-bit window.
inline void clmul_portable(Word a, Word b, Word& lo, Word& hi) {
  std::array<Word, 16> tlo{};
  std::array<Word, 16> thi{};
  tlo[1] = a;
  for (int i = 2; i < 16; i += 2) {
    tlo[i] = tlo[i / 2] << 1;
    thi[i] = (thi[i / 2] << 1) | (tlo[i / 2] >> 63);
    tlo[i + 1] = tlo[i] ^ a;
    thi[i + 1] = thi[i];
  }
  lo = 0;
  hi = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    const unsigned nib = static_cast<unsigned>(b >> shift) & 0xF;
    hi = (hi << 4) | (lo >> 60);
    lo <<= 4;
    lo ^= tlo[nib];
    hi ^= thi[nib];
  }
}

void mul_words_portable(std::span<const Word> a, std::span<const Word> b, Word* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word lo, hi;
      clmul_portable(a[i], b[j], lo, hi);
      out[i + j] ^= lo;
      out[i + j + 1] ^= hi;
    }
  }
}

#ifdef DRINFELD_HAVE_CLMUL_DISPATCH
__attribute__((target("pclmul,sse4.1"))) void mul_words_clmul(std::span<const Word> a,
                                                              std::span<const Word> b,
                                                              Word* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const __m128i av = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < b.size(); ++j) {
      const __m128i bv = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i p = _mm_clmulepi64_si128(av, bv, 0x00);
      out[i + j] ^= static_cast<Word>(_mm_cvtsi128_si64(p));
      out[i + j + 1] ^= static_cast<Word>(_mm_extract_epi64(p, 1));
    }
  }
}

const bool kHasClmul = [] {
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
}();
#endif

void mul_words(std::span<const Word> a, std::span<const Word> b, Word* out) {
  if (a.size() > b.size()) std::swap(a, b);
#ifdef DRINFELD_HAVE_CLMUL_DISPATCH
  if (kHasClmul) {
    mul_words_clmul(a, b, out);
    return;
  }
#endif
  mul_words_portable(a, b, out);
}

// Spread the 8 bits of a byte onto the even positions of 16 bits.
constexpr std::array<std::uint16_t, 256> make_spread_table() {
  std::array<std::uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    std::uint16_t s = 0;
    for (unsigned bit = 0; bit < 8; ++bit) {
      if (v >> bit & 1u) s |= static_cast<std::uint16_t>(1u << (2 * bit));
    }
    t[v] = s;
  }
  return t;
}
constexpr auto kSpread = make_spread_table();

inline Word spread32(std::uint32_t v) {
  return static_cast<Word>(kSpread[v & 0xFF]) | static_cast<Word>(kSpread[(v >> 8) & 0xFF]) << 16 |
         static_cast<Word>(kSpread[(v >> 16) & 0xFF]) << 32 |
         static_cast<Word>(kSpread[(v >> 24) & 0xFF]) << 48;
}

inline std::size_t top_bit(const std::vector<Word>& w) {
  return (w.size() - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(w.back())));
}

inline void trim_words(std::vector<Word>& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

// dst ^= src * x^shift; dst must already be large enough.
inline void xor_shifted(std::vector<Word>& dst, std::span<const Word> src, std::size_t shift) {
  const std::size_t ws = shift / 64;
  const unsigned bs = static_cast<unsigned>(shift % 64);
  if (bs == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
    return;
  }
  Word carry = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + ws] ^= (src[i] << bs) | carry;
    carry = src[i] >> (64 - bs);
  }
  if (carry != 0) dst[src.size() + ws] ^= carry;
}

// Reduce rem modulo divisor in place; optionally accumulate the quotient.
void reduce_in_place(std::vector<Word>& rem, const std::vector<Word>& divisor,
                     std::vector<Word>* quotient) {
  const std::size_t db = top_bit(divisor);
  while (!rem.empty()) {
    const std::size_t dr = top_bit(rem);
    if (dr < db) break;
    const std::size_t s = dr - db;
    xor_shifted(rem, divisor, s);
    if (quotient != nullptr) (*quotient)[s / 64] ^= Word{1} << (s % 64);
    trim_words(rem);
  }
}

}  // namespace

BinaryPoly::BinaryPoly(std::vector<Word> words) : words_(std::move(words)) { trim(); }

void BinaryPoly::trim() { trim_words(words_); }

BinaryPoly BinaryPoly::monomial(std::size_t exponent) {
  std::vector<Word> w(exponent / 64 + 1, 0);
  w.back() = Word{1} << (exponent % 64);
  return BinaryPoly(std::move(w));
}

BinaryPoly BinaryPoly::from_words(std::vector<Word> words) { return BinaryPoly(std::move(words)); }

BinaryPoly BinaryPoly::from_exponents(std::initializer_list<std::size_t> exponents) {
  BinaryPoly p;
  for (std::size_t e : exponents) p += monomial(e);
  return p;
}

BinaryPoly BinaryPoly::from_mask(std::uint64_t mask) { return BinaryPoly(std::vector<Word>{mask}); }

Degree BinaryPoly::degree() const {
  if (words_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(top_bit(words_)));
}

bool BinaryPoly::coefficient(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
}

std::size_t BinaryPoly::term_count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BinaryPoly& BinaryPoly::operator+=(const BinaryPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Word> out(a.words_.size() + b.words_.size(), 0);
  mul_words(a.words_, b.words_, out.data());
  return BinaryPoly(std::move(out));
}

BinaryPoly& BinaryPoly::operator*=(const BinaryPoly& other) {
  *this = *this * other;
  return *this;
}

BinaryPoly BinaryPoly::square() const {
  std::vector<Word> out(2 * words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[2 * i] = spread32(static_cast<std::uint32_t>(words_[i]));
    out[2 * i + 1] = spread32(static_cast<std::uint32_t>(words_[i] >> 32));
  }
  return BinaryPoly(std::move(out));
}

BinaryPoly BinaryPoly::frobenius(unsigned n) const {
  BinaryPoly p = *this;
  for (unsigned i = 0; i < n; ++i) p = p.square();
  return p;
}

BinaryPoly BinaryPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<Word> out(words_.size() + n / 64 + 1, 0);
  xor_shifted(out, words_, n);
  return BinaryPoly(std::move(out));
}

std::strong_ordering BinaryPoly::operator<=>(const BinaryPoly& other) const {
  if (auto c = words_.size() <=> other.words_.size(); c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string BinaryPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = top_bit(words_) + 1; i-- > 0;) {
    if (!coefficient(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

BinaryPoly BinaryPoly::parse(std::string_view text, char var) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  BinaryPoly result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  while (true) {
    bool coeff = true;
    bool saw_anything = false;
    if (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) {
      coeff = s[pos] == '1';
      ++pos;
      saw_anything = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != var) fail("expected variable after '*'");
      }
    }
    std::size_t exponent = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      saw_anything = true;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected exponent");
        exponent = std::stoull(s.substr(start, pos - start));
      }
    }
    if (!saw_anything) fail("expected term");
    if (coeff) result += monomial(exponent);
    if (pos == s.size()) break;
    if (s[pos] != '+' && s[pos] != '-') fail("expected '+'");
    ++pos;
  }
  return result;
}

DivRem divrem(const BinaryPoly& a, const BinaryPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {BinaryPoly{}, a};
  std::vector<Word> rem(a.words().begin(), a.words().end());
  const std::vector<Word> divisor(b.words().begin(), b.words().end());
  const std::size_t qbits = static_cast<std::size_t>(a.degree().value() - b.degree().value()) + 1;
  std::vector<Word> quot((qbits + 63) / 64, 0);
  reduce_in_place(rem, divisor, &quot);
  return {BinaryPoly::from_words(std::move(quot)), BinaryPoly::from_words(std::move(rem))};
}

BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Word> rem(a.words().begin(), a.words().end());
  const std::vector<Word> divisor(b.words().begin(), b.words().end());
  reduce_in_place(rem, divisor, nullptr);
  return BinaryPoly::from_words(std::move(rem));
}

BinaryPoly gcd(const BinaryPoly& a, const BinaryPoly& b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
  if (a.is_one() || b.is_one()) return BinaryPoly::one();
  std::vector<Word> u(a.words().begin(), a.words().end());
  std::vector<Word> v(b.words().begin(), b.words().end());
  while (!v.empty()) {
    reduce_in_place(u, v, nullptr);
    std::swap(u, v);
  }
  return BinaryPoly::from_words(std::move(u));
}

std::optional<BinaryPoly> divide_exact(const BinaryPoly& a, const BinaryPoly& b) {
  if (b.is_one()) return a;
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

}  // namespace drinfeld
