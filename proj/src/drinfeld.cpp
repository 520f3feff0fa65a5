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

#include "drinfeld/drinfeld.hpp"

#include <string>

#include "drinfeld/errors.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

namespace {

AElem exact_quotient(const KElem& num, const KElem& den, const std::string& what) {
  const KElem q = num / den;
  if (!q.in_ring()) throw ConsistencyError(what + " = " + q.to_string() + " is not in A");
  return q.to_ring();
}

}  // namespace

DrinfeldGenerators derive_generators() {
  const AElem x = AElem::x();
  const AElem y = AElem::y();
  const AElem x1 = bracket_x(1);
  const TwistedPoly rho_x({KElem(x), KElem(x1), KElem::one()});

  // tau^1 of rho_x rho_y = rho_y rho_x:  x y_1 + x_1 y^2 = y x_1 + y_1 x^2
  //   => y_1 (x^2 + x) = x_1 (y^2 + y)
  const AElem y1 = exact_quotient(KElem(x1 * (y.square() + y)), KElem(x.square() + x), "y_1");

  // tau^2:  x y_2 + x_1 y_1^2 + y^4 = y + y_1 x_1^2 + y_2 x^4
  //   => y_2 (x^4 + x) = x_1 y_1^2 + y_1 x_1^2 + y^4 + y
  const AElem rhs = x1 * y1.square() + y1 * x1.square() + y.frobenius(2) + y;
  const AElem y2 = exact_quotient(KElem(rhs), KElem(x.frobenius(2) + x), "y_2");

  TwistedPoly rho_y({KElem(y), KElem(y1), KElem(y2), KElem::one()});
  const TwistedPoly xy = rho_x * rho_y;
  const TwistedPoly yx = rho_y * rho_x;
  if (xy != yx) {
    throw VerificationFailure("rho_x rho_y != rho_y rho_x: " + xy.to_string() + " vs " + yx.to_string());
  }
  return {rho_x, std::move(rho_y)};
}

const DrinfeldGenerators& generators() {
  static const DrinfeldGenerators g = derive_generators();
  return g;
}

TwistedPoly rho_recursive(const AElem& a) {
  if (a.is_zero()) return {};
  const std::int64_t deg = a.degree().value();
  if (deg == 0) return TwistedPoly::constant(KElem(a));

  const AElem one_x = bracket_x(1);
  std::vector<AElem> c{a, a.square() + a};
  // One step past deg(a) so the vanishing of rho_{a,deg+1} is checked too.
  for (std::int64_t k = 2; k <= deg + 1; ++k) {
    const AElem& p1 = c[static_cast<std::size_t>(k - 1)];
    const AElem& p2 = c[static_cast<std::size_t>(k - 2)];
    const AElem num = one_x.frobenius(static_cast<unsigned>(k - 1)) * p1 + p2 + one_x * p1.square() + p2.frobenius(2);
    c.push_back(exact_quotient(KElem(num), KElem(bracket_x(static_cast<unsigned>(k))),
                               "rho_{" + a.to_string() + "," + std::to_string(k) + "}"));
  }
  if (!c.back().is_zero()) {
    throw ConsistencyError("rho_{" + a.to_string() + "," + std::to_string(deg + 1) + "} = " +
                           c.back().to_string() + " is nonzero");
  }
  c.pop_back();
  if (!c.back().is_one()) {
    throw ConsistencyError("rho_" + a.to_string() + " has leading coefficient " + c.back().to_string());
  }
  std::vector<KElem> coeffs(c.begin(), c.end());
  return TwistedPoly(std::move(coeffs));
}

namespace {

TwistedPoly horner(const BinaryPoly& f, const TwistedPoly& rho_x) {
  TwistedPoly acc;
  if (f.is_zero()) return acc;
  for (std::int64_t i = f.degree().value(); i >= 0; --i) {
    acc = acc * rho_x;
    if (f.coefficient(static_cast<std::size_t>(i))) acc += TwistedPoly::constant(KElem::one());
  }
  return acc;
}

}  // namespace

TwistedPoly rho_compose(const AElem& a) {
  const DrinfeldGenerators& gens = generators();
  TwistedPoly result = horner(a.f(), gens.rho_x);
  if (!a.g().is_zero()) result += horner(a.g(), gens.rho_x) * gens.rho_y;
  return result;
}

std::vector<AElem> rho_from_symbols(const std::vector<AddPoly>& symbols, const AElem& a) {
  std::vector<AElem> out;
  out.reserve(symbols.size());
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    const KElem v = symbols[k].evaluate(KElem(a));
    if (!v.in_ring()) {
      throw VerificationFailure("p_" + std::to_string(k) + "(" + a.to_string() + ") = " + v.to_string() +
                                " is not in A");
    }
    out.push_back(v.to_ring());
  }
  return out;
}

std::vector<RhoTableEntry> rho_coefficient_table(int max_deg) {
  if (max_deg < 2) throw BudgetError("rho_coefficient_table needs max_deg >= 2");
  const std::vector<KElem> d = d_seq(max_deg);
  const std::vector<KElem> ell = ell_seq(max_deg);
  std::vector<AddPoly> symbols;
  for (int k = 0; k <= max_deg; ++k) symbols.push_back(pk_symbol(k, d, ell));

  std::vector<RhoTableEntry> table;
  for (const AElem& a : enumerate(max_deg + 1, EnumMode::kBelow)) {
    const TwistedPoly rec = rho_recursive(a);
    const TwistedPoly comp = rho_compose(a);
    const std::vector<AElem> sym = rho_from_symbols(symbols, a);
    for (int k = 0; k <= max_deg; ++k) {
      const KElem r = rec.coefficient(static_cast<std::size_t>(k));
      const KElem c = comp.coefficient(static_cast<std::size_t>(k));
      const KElem s = KElem(sym[static_cast<std::size_t>(k)]);
      if (r != c || r != s) {
        throw VerificationFailure("rho_{" + a.to_string() + "," + std::to_string(k) + "}: recursive " +
                                  r.to_string() + ", composed " + c.to_string() + ", series " + s.to_string());
      }
    }
    RhoTableEntry entry{a, {}};
    for (const KElem& c : rec.coeffs()) entry.coeffs.push_back(c.to_ring());
    table.push_back(std::move(entry));
  }
  return table;
}

std::vector<FunctionalTerm> functional_equation_terms(const AElem& a, int order) {
  const QSeries e = exp_coeffs(order);
  const TwistedPoly rho = rho_recursive(a);
  std::vector<FunctionalTerm> terms;
  KElem a_pow(a);
  for (int n = 0; n <= order; ++n) {
    FunctionalTerm t;
    t.index = n;
    t.lhs = a_pow * e[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n && static_cast<std::size_t>(i) < rho.coeffs().size(); ++i) {
      t.rhs += rho.coeffs()[static_cast<std::size_t>(i)] *
               e[static_cast<std::size_t>(n - i)].frobenius(static_cast<unsigned>(i));
    }
    terms.push_back(std::move(t));
    a_pow = a_pow.square();
  }
  return terms;
}

}  // namespace drinfeld
