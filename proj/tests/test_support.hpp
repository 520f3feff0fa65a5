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

#ifndef DRINFELD_TESTS_TEST_SUPPORT_HPP
#define DRINFELD_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "drinfeld/curve_ring.hpp"
#include "drinfeld/f2poly.hpp"

namespace drinfeld::testing {

/// Uniform polynomial of degree <= max_degree (may be zero).
inline BinaryPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<std::uint64_t> words(max_degree / 64 + 1);
  for (auto& w : words) w = rng();
  const std::size_t spare = 63 - max_degree % 64;
  words.back() &= ~std::uint64_t{0} >> spare;
  return BinaryPoly::from_words(std::move(words));
}

inline BinaryPoly random_nonzero_poly(std::mt19937_64& rng, std::size_t max_degree) {
  BinaryPoly p;
  while (p.is_zero()) p = random_poly(rng, max_degree);
  return p;
}

/// Element of A with degree <= max_degree.
inline AElem random_aelem(std::mt19937_64& rng, int max_degree) {
  BinaryPoly f = random_poly(rng, static_cast<std::size_t>(max_degree / 2));
  BinaryPoly g = max_degree >= 3 ? random_poly(rng, static_cast<std::size_t>((max_degree - 3) / 2)) : BinaryPoly{};
  return AElem(std::move(f), std::move(g));
}

inline AElem random_nonzero_aelem(std::mt19937_64& rng, int max_degree) {
  AElem a;
  while (a.is_zero()) a = random_aelem(rng, max_degree);
  return a;
}

inline KElem random_kelem(std::mt19937_64& rng, int max_degree) {
  return KElem::fraction(random_aelem(rng, max_degree),
                         random_nonzero_poly(rng, static_cast<std::size_t>(max_degree / 2)));
}

inline KElem random_nonzero_kelem(std::mt19937_64& rng, int max_degree) {
  return KElem::fraction(random_nonzero_aelem(rng, max_degree),
                         random_nonzero_poly(rng, static_cast<std::size_t>(max_degree / 2)));
}

}  // namespace drinfeld::testing

#endif  // DRINFELD_TESTS_TEST_SUPPORT_HPP
