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

#include "drinfeld/verify.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/ekpoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

namespace {

constexpr Suite kAllSuites[] = {Suite::kCommute, Suite::kSeries,  Suite::kDivision,
                                Suite::kMain,    Suite::kSymbols, Suite::kCarlitz};

// Fixed seed: verify output must be byte-identical across runs.
constexpr std::uint64_t kSeed = 0x5eed'd21f'e1d0'0001ULL;

BinaryPoly random_poly(std::mt19937_64& rng, unsigned max_degree) {
  return BinaryPoly::from_mask(rng() & ((std::uint64_t{1} << (max_degree + 1)) - 1));
}

AElem random_aelem(std::mt19937_64& rng, unsigned max_degree) {
  return AElem(random_poly(rng, max_degree / 2), max_degree >= 3 ? random_poly(rng, (max_degree - 3) / 2) : BinaryPoly{});
}

KElem random_nonzero_kelem(std::mt19937_64& rng, unsigned max_degree) {
  AElem num;
  while (num.is_zero()) num = random_aelem(rng, max_degree);
  BinaryPoly den;
  while (den.is_zero()) den = random_poly(rng, max_degree / 2);
  return KElem::fraction(num, den);
}

class Collector {
 public:
  Collector(Suite suite, VerifyReport& report) : suite_(suite), report_(report) {}

  void add(std::string name, bool ok, std::string detail) {
    report_.lines.push_back({suite_, std::move(name), ok, std::move(detail)});
  }

  // Runs body; a thrown library error turns into a failing line.
  void run(const std::string& name, const std::function<std::string()>& body) {
    try {
      add(name, true, body());
    } catch (const VerificationFailure& e) {
      add(name, false, e.what());
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  Suite suite_;
  VerifyReport& report_;
};

std::string mismatch(const std::string& what, const KElem& lhs, const KElem& rhs) {
  return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

void commute_suite(Collector& out, int max_k) {
  out.run("generators", [] {
    const DrinfeldGenerators g = derive_generators();
    const TwistedPoly want_x({KElem::parse("x"), KElem::parse("x^2+x"), KElem::one()});
    const TwistedPoly want_y(
        {KElem::parse("y"), KElem::parse("y^2+y"), KElem::parse("x*(y^2+y)"), KElem::one()});
    if (g.rho_x != want_x) throw VerificationFailure("rho_x = " + g.rho_x.to_string());
    if (g.rho_y != want_y) throw VerificationFailure("rho_y = " + g.rho_y.to_string());
    if (g.rho_x * g.rho_y != g.rho_y * g.rho_x) throw VerificationFailure("rho_x rho_y != rho_y rho_x");
    return "y1 = " + g.rho_y.coefficient(1).to_string() + ", y2 = " + g.rho_y.coefficient(2).to_string() +
           ", rho_x rho_y = rho_y rho_x";
  });

  const int deg = std::min(max_k, 8);
  out.run("rho three routes deg<" + std::to_string(deg + 1), [deg] {
    const auto table = rho_coefficient_table(deg);
    for (const RhoTableEntry& row : table) {
      const Degree d = row.a.degree();
      const std::size_t top = d.is_neg_inf() ? 0 : static_cast<std::size_t>(d.value());
      if (!row.a.is_zero() && (row.coeffs.size() != top + 1 || !row.coeffs.back().is_one())) {
        throw VerificationFailure("rho_" + row.a.to_string() + " does not end in 1 at tau^" + std::to_string(top));
      }
    }
    return std::to_string(table.size()) + " elements agree, coefficients in A";
  });
}

void series_suite(Collector& out, int max_k) {
  const int order = max_k + 2;
  for (const char* text : {"x", "y", "x+y", "x*y"}) {
    out.run(std::string("e(az) = rho_a(e(z)) a=") + text, [order, text] {
      for (const FunctionalTerm& t : functional_equation_terms(AElem::parse(text), order)) {
        if (t.lhs != t.rhs) throw VerificationFailure(mismatch("z^(2^" + std::to_string(t.index) + ")", t.lhs, t.rhs));
      }
      return "through z^(2^" + std::to_string(order) + ")";
    });
  }

  out.run("exp(log z) = z", [order] {
    const QSeries s = compose_scaled(exp_coeffs(order), AElem::one(), log_coeffs(order), order);
    for (int i = 0; i <= order; ++i) {
      const KElem want = i == 0 ? KElem::one() : KElem{};
      if (s[i] != want) throw VerificationFailure(mismatch("index " + std::to_string(i), s[i], want));
    }
    return "identity through index " + std::to_string(order);
  });
  out.run("log(exp z) = z", [order] {
    const QSeries s = compose_scaled(log_coeffs(order), AElem::one(), exp_coeffs(order), order);
    for (int i = 0; i <= order; ++i) {
      const KElem want = i == 0 ? KElem::one() : KElem{};
      if (s[i] != want) throw VerificationFailure(mismatch("index " + std::to_string(i), s[i], want));
    }
    return "identity through index " + std::to_string(order);
  });

  // Rerunning the exp recursion from c gives coefficients c^(2^j) a_j, i.e.
  // the series of e(cz). The log recursion is linear, so it scales by c.
  out.run("scaled exp = e(c z), 20 random c", [order] {
    std::mt19937_64 rng(kSeed);
    const QSeries e = exp_coeffs(order);
    for (int trial = 0; trial < 20; ++trial) {
      const KElem c = random_nonzero_kelem(rng, 8);
      const QSeries s = scale_series(e, c);
      KElem c_pow = c;
      for (int j = 0; j <= order; ++j, c_pow = c_pow.square()) {
        if (s[j] != c_pow * e[j]) {
          throw VerificationFailure(mismatch("c = " + c.to_string() + ", index " + std::to_string(j), s[j], c_pow * e[j]));
        }
      }
    }
    return std::string("20 of 20");
  });
  out.run("scaled log = c log(z), 20 random c", [order] {
    std::mt19937_64 rng(kSeed + 1);
    const QSeries l = log_coeffs(order);
    for (int trial = 0; trial < 20; ++trial) {
      const KElem c = random_nonzero_kelem(rng, 8);
      const QSeries s = scale_series(l, c);
      for (int j = 0; j <= order; ++j) {
        if (s[j] != c * l[j]) {
          throw VerificationFailure(mismatch("c = " + c.to_string() + ", index " + std::to_string(j), s[j], c * l[j]));
        }
      }
    }
    return std::string("20 of 20");
  });
}

void division_suite(Collector& out, int max_k) {
  const int top = std::min(max_k + 1, 12);
  for (int k = 2; k <= top; ++k) {
    out.run("k=" + std::to_string(k), [k] {
      const DivisionResult r = division_theorem_check(k);
      if (r.C != r.C_from_D) throw VerificationFailure(mismatch("C", r.C, r.C_from_D));
      return "p_" + std::to_string(k) + " = e_k^2/d_k + C e_k, both forms of C agree (numerator degree " +
             r.C.numerator().degree().to_string() + ")";
    });
  }
}

void main_suite(Collector& out, int max_k) {
  std::vector<MainTheoremRow> rows;
  try {
    rows = main_theorem_table(max_k);
  } catch (const std::exception& e) {
    out.add("theorem", false, e.what());
    return;
  }
  for (const MainTheoremRow& row : rows) {
    const std::string k = std::to_string(row.k);
    out.add("k=" + k, true, "d_" + k + " OK / ell_" + k + " OK");
  }
}

void symbols_suite(Collector& out, int max_k) {
  for (int k = 2; k <= std::min(max_k, 10); ++k) {
    out.run("D_" + std::to_string(k) + " eval = brute", [k] {
      const AElem eval = Dk(k, DkMode::kEval);
      const AElem brute = Dk(k, DkMode::kBrute);
      if (eval != brute) throw VerificationFailure(mismatch("D_" + std::to_string(k), eval, brute));
      return "deg " + eval.degree().to_string();
    });
  }

  const int ek_top = std::min(max_k, 8);
  out.run("e_k recursive = brute k<=" + std::to_string(ek_top), [ek_top] {
    for (int k = 2; k <= ek_top; ++k) {
      const AddPoly rec = ek_recursive(k);
      const AddPoly brute = ek_bruteforce(k);
      if (rec != brute) {
        throw VerificationFailure("e_" + std::to_string(k) + ": " + rec.to_string() + " != " + brute.to_string());
      }
    }
    return std::string("agree");
  });
  out.run("e_k vanishing sets k<=" + std::to_string(ek_top), [ek_top] {
    const EkChain chain = ek_chain(ek_top);
    for (int k = 2; k <= ek_top; ++k) {
      const AddPoly e = chain.e(k);
      const KElem D(chain.D[static_cast<std::size_t>(k)]);
      for (const AElem& a : enumerate(k, EnumMode::kBelow)) {
        const KElem v = e.evaluate(KElem(a));
        if (!v.is_zero()) throw VerificationFailure(mismatch("e_" + std::to_string(k) + "(" + a.to_string() + ")", v, {}));
      }
      for (const AElem& a : enumerate(k, EnumMode::kExact)) {
        const KElem v = e.evaluate(KElem(a));
        if (v != D) throw VerificationFailure(mismatch("e_" + std::to_string(k) + "(" + a.to_string() + ")", v, D));
      }
    }
    return std::string("zero on A_<k, D_k on A_k");
  });

  // [k]_w lemma, 100 random w (and w2) per property, 1 <= k <= 6.
  using Property = std::function<void(unsigned, const KElem&, const KElem&)>;
  const std::pair<const char*, Property> lemma[] = {
      {"[k]_w^(2^j) = [k]_(w^(2^j))",
       [](unsigned k, const KElem& w, const KElem&) {
         for (unsigned j = 0; j <= 3; ++j) {
           const KElem l = bracket_w(k, w).frobenius(j);
           const KElem r = bracket_w(k, w.frobenius(j));
           if (l != r) throw VerificationFailure(mismatch("k=" + std::to_string(k) + " j=" + std::to_string(j), l, r));
         }
       }},
      {"[1]_([k]_w) = [k]_([1]_w)",
       [](unsigned k, const KElem& w, const KElem&) {
         const KElem l = bracket_w(1, bracket_w(k, w));
         const KElem r = bracket_w(k, bracket_w(1, w));
         if (l != r) throw VerificationFailure(mismatch("k=" + std::to_string(k), l, r));
       }},
      {"[k]_(w1+w2) = [k]_w1 + [k]_w2",
       [](unsigned k, const KElem& w, const KElem& w2) {
         const KElem l = bracket_w(k, w + w2);
         const KElem r = bracket_w(k, w) + bracket_w(k, w2);
         if (l != r) throw VerificationFailure(mismatch("k=" + std::to_string(k), l, r));
       }},
      {"[k+1]_w = [k]_w^2 + [1]_w",
       [](unsigned k, const KElem& w, const KElem&) {
         const KElem l = bracket_w(k + 1, w);
         const KElem r = bracket_w(k, w).square() + bracket_w(1, w);
         if (l != r) throw VerificationFailure(mismatch("k=" + std::to_string(k), l, r));
       }},
      {"[k]_w = sum [1]_w^(2^i)",
       [](unsigned k, const KElem& w, const KElem&) {
         KElem r;
         for (unsigned i = 0; i < k; ++i) r += bracket_w(1, w).frobenius(i);
         const KElem l = bracket_w(k, w);
         if (l != r) throw VerificationFailure(mismatch("k=" + std::to_string(k), l, r));
       }},
  };
  std::uint64_t salt = 0;
  for (const auto& [name, property] : lemma) {
    const std::uint64_t seed = kSeed + 100 + salt++;
    out.run(name, [&property, seed] {
      std::mt19937_64 rng(seed);
      for (int trial = 0; trial < 100; ++trial) {
        const KElem w(random_aelem(rng, 20));
        const KElem w2(random_aelem(rng, 20));
        for (unsigned k = 1; k <= 6; ++k) property(k, w, w2);
      }
      return std::string("100 random w, k <= 6");
    });
  }

  out.run("S_{n,r} recursion = direct, n<=6", [] {
    std::mt19937_64 rng(kSeed + 200);
    for (int n = 0; n <= 6; ++n) {
      std::vector<KElem> values;
      for (int i = 0; i < n; ++i) values.push_back(random_nonzero_kelem(rng, 6));
      for (int r = 0; r <= n + 1; ++r) S_sym(n, r, values);
    }
    return std::string("all r");
  });

  const int t_top = std::min(max_k + 1, 9);
  for (int k = 2; k <= t_top; ++k) {
    out.run("T_" + std::to_string(k) + " = S(D), B from T", [k] {
      const OneBasisPoly t = T_coeffs(k);
      const std::vector<AElem> b = B_coeffs(k);
      const AddPoly converted = basis_convert(t);
      for (int i = 0; i < k; ++i) {
        const KElem bi(b[static_cast<std::size_t>(i)]);
        if (converted.coefficient(static_cast<std::size_t>(i)) != bi) {
          throw VerificationFailure(mismatch("B_{" + std::to_string(k) + "," + std::to_string(i) + "}",
                                             converted.coefficient(static_cast<std::size_t>(i)), bi));
        }
      }
      std::int64_t expect = 0;
      for (int j = 2; j <= k - 1; ++j) expect += static_cast<std::int64_t>(j) << (j - 1);
      if (b[0].degree() != expect) {
        throw VerificationFailure("deg B_{" + std::to_string(k) + ",0} = " + b[0].degree().to_string() + ", expected " +
                                  std::to_string(expect));
      }
      return "deg B_{k,0} = " + std::to_string(expect);
    });
  }
}

void carlitz_suite(Collector& out, int) {
  for (unsigned n = 0; n <= 6; ++n) {
    out.run("d_" + std::to_string(n) + " = product of monics", [n] {
      const BinaryPoly d = carlitz::carlitz_d(n);
      const BinaryPoly m = carlitz::monic_product(n);
      if (d != m) throw VerificationFailure("d_" + std::to_string(n) + ": " + d.to_string('t') + " != " + m.to_string('t'));
      carlitz::carlitz_ell(n);
      return "deg " + d.degree().to_string();
    });
  }
  out.run("[i] a_i = a_{i-1}^2, i<=8", [] {
    const carlitz::FunctionalReport r = carlitz::carlitz_functional_check(8);
    for (const auto& c : r.checks) {
      if (!c.ok) throw VerificationFailure("i = " + std::to_string(c.index) + ": " + c.lhs + " != " + c.rhs);
    }
    return r.interpretation;
  });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Suite s : {Suite::kAll, Suite::kCommute, Suite::kSeries, Suite::kDivision, Suite::kMain, Suite::kSymbols,
                  Suite::kCarlitz}) {
    std::string n = suite_name(s);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == lower) return s;
  }
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kAll: return "ALL";
    case Suite::kCommute: return "COMMUTE";
    case Suite::kSeries: return "SERIES";
    case Suite::kDivision: return "DIVISION";
    case Suite::kMain: return "MAIN";
    case Suite::kSymbols: return "SYMBOLS";
    case Suite::kCarlitz: return "CARLITZ";
  }
  return "?";
}

std::string CheckLine::render() const {
  return std::string(ok ? "[PASS] " : "[FAIL] ") + suite_name(suite) + " " + name + ": " + detail;
}

bool VerifyReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
}

const CheckLine* VerifyReport::first_failure() const {
  for (const CheckLine& l : lines) {
    if (!l.ok) return &l;
  }
  return nullptr;
}

VerifyReport run_suite(Suite suite, int max_k) {
  if (max_k < kVerifyMinK || max_k > kVerifyMaxK) {
    throw BudgetError("verify: max_k must be in " + std::to_string(kVerifyMinK) + ".." + std::to_string(kVerifyMaxK) +
                      ", got " + std::to_string(max_k));
  }
  VerifyReport report;
  for (Suite s : kAllSuites) {
    if (suite != Suite::kAll && suite != s) continue;
    Collector out(s, report);
    switch (s) {
      case Suite::kCommute: commute_suite(out, max_k); break;
      case Suite::kSeries: series_suite(out, max_k); break;
      case Suite::kDivision: division_suite(out, max_k); break;
      case Suite::kMain: main_suite(out, max_k); break;
      case Suite::kSymbols: symbols_suite(out, max_k); break;
      case Suite::kCarlitz: carlitz_suite(out, max_k); break;
      case Suite::kAll: break;
    }
  }
  return report;
}

}  // namespace drinfeld
