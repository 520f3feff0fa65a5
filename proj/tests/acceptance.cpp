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

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is 0 only if every criterion passes.

#include <sys/wait.h>

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/carlitz.hpp"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/ekpoly.hpp"
#include "drinfeld/series.hpp"

#ifndef DRINFELD_CLI_PATH
#error "DRINFELD_CLI_PATH must name the command-line binary"
#endif

using namespace drinfeld;

namespace {

struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failed(what);
}

std::string neq(const KElem& a, const KElem& b) { return a.to_string() + " != " + b.to_string(); }

BinaryPoly random_poly(std::mt19937_64& rng, unsigned max_degree) {
  return BinaryPoly::from_mask(rng() & ((std::uint64_t{1} << (max_degree + 1)) - 1));
}

AElem random_aelem(std::mt19937_64& rng, unsigned max_degree) {
  return AElem(random_poly(rng, max_degree / 2), random_poly(rng, (max_degree - 3) / 2));
}

KElem random_nonzero_kelem(std::mt19937_64& rng, unsigned max_degree) {
  AElem num;
  while (num.is_zero()) num = random_aelem(rng, max_degree);
  BinaryPoly den;
  while (den.is_zero()) den = random_poly(rng, max_degree / 2);
  return KElem::fraction(num, den);
}

struct Command {
  int status;
  std::string out;
};

Command shell(const std::string& args) {
  const std::string cmd = std::string("\"") + DRINFELD_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw Failed("cannot start " + cmd);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// ---------------------------------------------------------------------------

std::string generators_criterion() {
  const DrinfeldGenerators g = derive_generators();
  expect(g.rho_x == TwistedPoly({KElem::parse("x"), KElem::parse("x^2+x"), KElem::one()}), "rho_x");
  expect(g.rho_y.coefficient(1) == KElem::parse("y^2+y"), "y1 = " + g.rho_y.coefficient(1).to_string());
  expect(g.rho_y.coefficient(2) == KElem::parse("x*(y^2+y)"), "y2 = " + g.rho_y.coefficient(2).to_string());
  expect(g.rho_y.coefficient(3).is_one() && g.rho_y.coeffs().size() == 4, "rho_y shape");
  expect(g.rho_x * g.rho_y == g.rho_y * g.rho_x, "rho_x rho_y != rho_y rho_x");
  return "y1 = y^2+y, y2 = x(y^2+y), generators commute";
}

std::string three_routes_criterion() {
  const auto table = rho_coefficient_table(8);
  expect(table.size() == 256, "table has " + std::to_string(table.size()) + " rows");
  for (const RhoTableEntry& row : table) {
    const TwistedPoly comp = rho_compose(row.a);
    const TwistedPoly rec = rho_recursive(row.a);
    expect(rec == comp, "recursive != composed for " + row.a.to_string());
    expect(rec.in_ring(), "denominator for " + row.a.to_string());
    if (!row.a.is_zero()) {
      const auto deg = static_cast<std::size_t>(row.a.degree().value());
      expect(rec.coeffs().size() == deg + 1 && rec.coeffs().back().is_one(),
             "leading coefficient for " + row.a.to_string());
    }
  }
  return "256 elements of A_<9, recursive = composed = p_k(a), all in A, leading 1";
}

std::string functional_criterion() {
  for (const char* s : {"x", "y", "x+y", "x*y"}) {
    for (const FunctionalTerm& t : functional_equation_terms(AElem::parse(s), 10)) {
      expect(t.lhs == t.rhs, std::string("a = ") + s + ", z^(2^" + std::to_string(t.index) + "): " + neq(t.lhs, t.rhs));
    }
  }
  return "e(az) = rho_a(e(z)) through z^(2^10) for a in {x, y, x+y, xy}";
}

std::string inversion_criterion() {
  const int order = 10;
  const QSeries e = exp_coeffs(order);
  const QSeries l = log_coeffs(order);
  for (const auto& [name, s] : {std::pair{"exp(log z)", compose_scaled(e, AElem::one(), l, order)},
                                std::pair{"log(exp z)", compose_scaled(l, AElem::one(), e, order)}}) {
    for (int i = 0; i <= order; ++i) {
      const KElem want = i == 0 ? KElem::one() : KElem{};
      expect(s[i] == want, std::string(name) + " index " + std::to_string(i) + ": " + neq(s[i], want));
    }
  }

  // log(z, b0) = b0 log(z)
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    const KElem b0 = random_nonzero_kelem(rng, 8);
    const QSeries s = scale_series(l, b0);
    for (int j = 0; j <= order; ++j) {
      expect(s[j] == b0 * l[j], "log scaling, b0 = " + b0.to_string() + ", index " + std::to_string(j));
    }
  }

  // e(z, a0) = a0 e(z), as stated. The rerun recursion gives a0^(2^j) a_j,
  // so the stated form can only hold for a0 in F2; count and report.
  int holds = 0;
  int holds_dilated = 0;
  std::string first;
  for (int trial = 0; trial < 20; ++trial) {
    const KElem a0 = random_nonzero_kelem(rng, 8);
    const QSeries s = scale_series(e, a0);
    bool ok = true;
    bool dilated = true;
    KElem a0_pow = a0;
    for (int j = 0; j <= order; ++j, a0_pow = a0_pow.square()) {
      if (s[j] != a0 * e[j]) {
        if (ok && first.empty()) first = "a0 = " + a0.to_string() + ", index " + std::to_string(j) + ": " + neq(s[j], a0 * e[j]);
        ok = false;
      }
      if (s[j] != a0_pow * e[j]) dilated = false;
    }
    holds += ok;
    holds_dilated += dilated;
  }
  expect(holds == 20, "inversion OK, log scaling 20/20, exp scaling e(z,a0) = a0 e(z) holds " + std::to_string(holds) +
                          "/20 (e(z,a0) = e(a0 z) holds " + std::to_string(holds_dilated) + "/20); first: " + first);
  return "inversion through index 10, both scalings 20/20";
}

std::string dk_criterion() {
  expect(Dk(2, DkMode::kEval) == AElem::parse("x^2+x"), "D_2");
  expect(Dk(3, DkMode::kEval) == AElem::parse("x^6+x^5+x^4+x^3+x^2+x+1"), "D_3");
  for (int k = 2; k <= 10; ++k) {
    const AElem eval = Dk(k, DkMode::kEval);
    const AElem brute = Dk(k, DkMode::kBrute);
    expect(eval == brute, "D_" + std::to_string(k) + ": " + neq(eval, brute));
  }
  return "EVAL = BRUTE for 2 <= k <= 10, D_2 and D_3 as expected";
}

std::string ek_criterion() {
  const EkChain chain = ek_chain(8);
  for (int k = 2; k <= 8; ++k) {
    expect(ek_recursive(k) == ek_bruteforce(k), "e_" + std::to_string(k) + " recursive != brute");
    const AddPoly e = chain.e(k);
    const KElem D(chain.D[static_cast<std::size_t>(k)]);
    for (const AElem& a : enumerate(k, EnumMode::kBelow)) {
      expect(e.evaluate(KElem(a)).is_zero(), "e_" + std::to_string(k) + "(" + a.to_string() + ") != 0");
    }
    for (const AElem& a : enumerate(k, EnumMode::kExact)) {
      expect(e.evaluate(KElem(a)) == D, "e_" + std::to_string(k) + "(" + a.to_string() + ") != D_k");
    }
  }
  return "recursive = brute force and exhaustive vanishing sets for 2 <= k <= 8";
}

std::string division_criterion() {
  for (int k = 2; k <= 9; ++k) {
    const DivisionResult r = division_theorem_check(k);
    expect(r.C == r.C_from_D, "k = " + std::to_string(k) + ": " + neq(r.C, r.C_from_D));
  }
  return "p_k = e_k^2/d_k + C e_k and both C forms agree for 2 <= k <= 9";
}

std::string main_criterion() {
  const auto rows = main_theorem_table(12);
  const auto d = d_seq(12);
  const auto ell = ell_seq(12);
  expect(rows.size() == 11, "row count");
  for (const MainTheoremRow& row : rows) {
    const auto k = static_cast<std::size_t>(row.k);
    expect(row.d == d[k], "d_" + std::to_string(k));
    expect(row.ell == ell[k], "ell_" + std::to_string(k));
  }
  return "d_k, ell_k from D_2..D_k equal the recursions for 2 <= k <= 12, multiplier = B_{k+1,k-1}";
}

std::string symbols_criterion() {
  std::mt19937_64 rng(909);
  auto w_stream = [&rng] { return KElem(random_aelem(rng, 20)); };
  for (int trial = 0; trial < 100; ++trial) {
    const KElem w = w_stream();
    for (unsigned k = 1; k <= 6; ++k) {
      for (unsigned j = 0; j <= 3; ++j) expect(bracket_w(k, w).frobenius(j) == bracket_w(k, w.frobenius(j)), "property 1");
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const KElem w = w_stream();
    for (unsigned k = 1; k <= 6; ++k) expect(bracket_w(1, bracket_w(k, w)) == bracket_w(k, bracket_w(1, w)), "property 2");
  }
  for (int trial = 0; trial < 100; ++trial) {
    const KElem w1 = w_stream();
    const KElem w2 = w_stream();
    for (unsigned k = 1; k <= 6; ++k) expect(bracket_w(k, w1 + w2) == bracket_w(k, w1) + bracket_w(k, w2), "property 3");
  }
  for (int trial = 0; trial < 100; ++trial) {
    const KElem w = w_stream();
    for (unsigned k = 1; k <= 6; ++k) {
      expect(bracket_w(k + 1, w) == bracket_w(k, w).square() + bracket_w(1, w), "property 4");
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const KElem w = w_stream();
    for (unsigned k = 1; k <= 6; ++k) {
      KElem sum;
      for (unsigned i = 0; i < k; ++i) sum += bracket_w(1, w).frobenius(i);
      expect(bracket_w(k, w) == sum, "property 5");
    }
  }

  for (int n = 0; n <= 6; ++n) {
    std::vector<KElem> v;
    for (int i = 0; i < n; ++i) v.push_back(random_nonzero_kelem(rng, 6));
    for (int r = 0; r <= n + 1; ++r) {
      const KElem direct = S_sym_direct(n, r, v);
      const KElem rec = S_sym_recursive(n, r, v);
      expect(direct == rec, "S_{" + std::to_string(n) + "," + std::to_string(r) + "}: " + neq(direct, rec));
    }
  }

  const EkChain chain = ek_chain(9);
  for (int k = 2; k <= 9; ++k) {
    const OneBasisPoly t = T_coeffs(k);
    std::vector<KElem> D;
    for (int j = 2; j <= k - 1; ++j) D.push_back(KElem(chain.D[static_cast<std::size_t>(j)]));
    for (int i = 0; i <= k - 2; ++i) {
      const KElem s = S_sym(k - 2, k - 2 - i, D);
      expect(t.coefficient(static_cast<std::size_t>(i)) == s, "T_{" + std::to_string(k) + "," + std::to_string(i) + "}");
    }
    const AddPoly b = basis_convert(t);
    const AddPoly e = chain.e(k);
    for (int i = 0; i < k; ++i) {
      expect(b.coefficient(static_cast<std::size_t>(i)) == e.coefficient(static_cast<std::size_t>(i)),
             "B_{" + std::to_string(k) + "," + std::to_string(i) + "} != T_i + T_{i-1}");
    }
  }
  return "five [k]_w properties on 100 w each, S recursion for n <= 6, T = S(D) and B from T for 2 <= k <= 9";
}

std::string carlitz_criterion() {
  for (unsigned n = 0; n <= 6; ++n) {
    BinaryPoly rec = BinaryPoly::one();
    for (unsigned i = 1; i <= n; ++i) rec = carlitz::bracket(i) * rec.square();
    const BinaryPoly d = carlitz::carlitz_d(n);
    expect(d == rec, "d_" + std::to_string(n) + " recursion");
    expect(d == carlitz::monic_product(n), "d_" + std::to_string(n) + " != product of monics");
  }
  const carlitz::FunctionalReport r = carlitz::carlitz_functional_check(8);
  for (const auto& c : r.checks) expect(c.ok, "[i] a_i = a_{i-1}^2 at i = " + std::to_string(c.index));
  return "d_n = [n] d_{n-1}^2 = closed product = product of monics for n <= 6; [i] a_i = a_{i-1}^2 for i <= 8";
}

std::string cli_criterion() {
  const Command v = shell("verify --suite all --max-k 8");
  expect(v.status == 0, "verify --suite all --max-k 8 exited " + std::to_string(v.status));
  const Command t1 = shell("table --max-k 3");
  const Command t2 = shell("table --max-k 3");
  expect(t1.status == 0, "table exited " + std::to_string(t1.status));
  expect(t1.out == t2.out, "table output differs between runs");

  const auto d = d_seq(3);
  const auto ell = ell_seq(3);
  std::istringstream in(t1.out);
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("k=", 0) != 0) continue;
    std::istringstream fields(line);
    std::string kf, df, lf, Df;
    fields >> kf >> df >> lf >> Df;
    const auto k = static_cast<std::size_t>(std::stoi(kf.substr(2)));
    expect(df.rfind("d=", 0) == 0 && lf.rfind("ell=", 0) == 0 && Df.rfind("D=", 0) == 0, "row layout: " + line);
    expect(KElem::parse(df.substr(2)) == d[k], "d_" + std::to_string(k) + " re-parse");
    expect(KElem::parse(lf.substr(4)) == ell[k], "ell_" + std::to_string(k) + " re-parse");
    expect(AElem::parse(Df.substr(2)) == Dk(static_cast<int>(k), DkMode::kEval), "D_" + std::to_string(k) + " re-parse");
    ++rows;
  }
  expect(rows == 2, "expected rows k = 2, 3");
  return "verify exits 0; table --max-k 3 is deterministic and re-parses to library values";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"generator derivation", generators_criterion},
      {"three-way rho_a agreement", three_routes_criterion},
      {"functional equation", functional_criterion},
      {"exp/log inversion and scaling", inversion_criterion},
      {"D_k oracle", dk_criterion},
      {"e_k oracle", ek_criterion},
      {"division theorem", division_criterion},
      {"main theorem", main_criterion},
      {"symbol lemmas", symbols_criterion},
      {"Carlitz oracle", carlitz_criterion},
      {"CLI determinism", cli_criterion},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << "criterion " << (i + 1) << " (" << name << "): " << detail << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
