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

#include "drinfeld/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/ekpoly.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld::cli {

namespace {

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "out of budget: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}

std::string range_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

int run_table(int max_k, Format format, std::ostream& out, std::ostream& err) {
  if (max_k < kTableMinK || max_k > kTableMaxK) {
    err << "usage error: --max-k must be in " << range_text(kTableMinK, kTableMaxK) << ", got " << max_k << '\n';
    return kExitUsage;
  }
  return guarded(err, [&] {
    const std::vector<KElem> d = d_seq(max_k);
    const std::vector<KElem> ell = ell_seq(max_k);
    const EkChain chain = ek_chain(max_k);

    std::string status = "OK";
    int code = kExitOk;
    try {
      main_theorem_table(max_k);
    } catch (const VerificationFailure& e) {
      status = std::string("FAIL ") + e.what();
      code = kExitVerification;
    }

    if (format == Format::kCsv) out << "k,d,ell,D\n";
    for (int k = 2; k <= max_k; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const std::string ds = d[i].to_string();
      const std::string ls = ell[i].to_string();
      const std::string Ds = chain.D[i].to_string();
      switch (format) {
        case Format::kText:
          out << "k=" << k << " d=" << ds << " ell=" << ls << " D=" << Ds << '\n';
          break;
        case Format::kCsv:
          out << k << ',' << ds << ',' << ls << ',' << Ds << '\n';
          break;
        case Format::kJson: {
          nlohmann::ordered_json row;
          row["k"] = k;
          row["d"] = ds;
          row["ell"] = ls;
          row["D"] = Ds;
          row["main_theorem"] = status;
          out << row.dump() << '\n';
          break;
        }
      }
    }
    const std::string footer = "main theorem for 2 <= k <= " + std::to_string(max_k) + ": " + status;
    if (format == Format::kText) {
      out << footer << '\n';
    } else if (format == Format::kCsv) {
      err << footer << '\n';
    }
    return code;
  });
}

int run_rho(std::string_view element, std::ostream& out, std::ostream& err) {
  AElem a;
  try {
    const KElem parsed = KElem::parse(element);
    if (!parsed.in_ring()) {
      err << "parse error: " << parsed.to_string() << " is not in A\n";
      return kExitUsage;
    }
    a = parsed.to_ring();
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Degree deg = a.degree();
  if (!deg.is_neg_inf() && deg.value() > kRhoMaxDegree) {
    err << "out of budget: deg(a) = " << deg.value() << " exceeds " << kRhoMaxDegree << '\n';
    return kExitUsage;
  }
  return guarded(err, [&] {
    const TwistedPoly rec = rho_recursive(a);
    const TwistedPoly comp = rho_compose(a);
    const int top = deg.is_neg_inf() ? 0 : static_cast<int>(deg.value());
    const std::vector<KElem> d = d_seq(top);
    const std::vector<KElem> ell = ell_seq(top);
    std::vector<AddPoly> symbols;
    for (int k = 0; k <= top; ++k) symbols.push_back(pk_symbol(k, d, ell));
    const std::vector<AElem> sym = rho_from_symbols(symbols, a);

    out << "a = " << a.to_string() << '\n';
    out << "deg = " << deg.to_string() << '\n';
    for (int k = 0; k <= top; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const KElem r = rec.coefficient(i);
      const KElem c = comp.coefficient(i);
      const KElem s(sym[i]);
      if (r != c || r != s) {
        err << "route disagreement at rho_{a," << k << "}: recursive " << r.to_string() << ", composed "
            << c.to_string() << ", series " << s.to_string() << '\n';
        return static_cast<int>(kExitVerification);
      }
      out << "rho_" << k << " = " << r.to_string() << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int run_ek(int k, std::ostream& out, std::ostream& err) {
  if (k < 2 || k > kEkMaxK) {
    err << "usage error: --degree must be in " << range_text(2, kEkMaxK) << ", got " << k << '\n';
    return kExitUsage;
  }
  return guarded(err, [&] {
    const EkChain chain = ek_chain(k);
    const auto ki = static_cast<std::size_t>(k);
    out << "k = " << k << '\n';
    out << "D_" << k << " = " << chain.D[ki].to_string() << '\n';
    out << "e_" << k << " = " << chain.e(k).to_string() << '\n';
    for (std::size_t i = 0; i < chain.B[ki].size(); ++i) {
      out << "B_{" << k << ',' << i << "} = " << chain.B[ki][i].to_string() << '\n';
    }
    if (k <= kDefaultBruteBudget) {
      const OneBasisPoly t = T_coeffs(k);
      for (std::size_t i = 0; i < t.coeffs().size(); ++i) {
        out << "T_{" << k << ',' << i << "} = " << t.coeffs()[i].to_string() << '\n';
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int run_enumerate(int degree, EnumMode mode, std::ostream& out, std::ostream& err) {
  if (degree < 0 || degree > kEnumerateMaxDegree) {
    err << "usage error: --degree must be in " << range_text(0, kEnumerateMaxDegree) << ", got " << degree << '\n';
    return kExitUsage;
  }
  return guarded(err, [&] {
    for (const AElem& a : enumerate(degree, mode)) out << a.to_string() << '\n';
    return static_cast<int>(kExitOk);
  });
}

int run_verify(Suite suite, int max_k, std::ostream& out, std::ostream& err) {
  if (max_k < kVerifyMinK || max_k > kVerifyMaxK) {
    err << "usage error: --max-k must be in " << range_text(kVerifyMinK, kVerifyMaxK) << ", got " << max_k << '\n';
    return kExitUsage;
  }
  return guarded(err, [&] {
    const VerifyReport report = run_suite(suite, max_k);
    for (const CheckLine& line : report.lines) out << line.render() << '\n';
    if (const CheckLine* bad = report.first_failure()) {
      out << "first failure: " << suite_name(bad->suite) << ' ' << bad->name << ": " << bad->detail << '\n';
      return static_cast<int>(kExitVerification);
    }
    out << "all " << report.lines.size() << " checks passed\n";
    return static_cast<int>(kExitOk);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic and verification for a rank-one Drinfeld module over F2[x,y]/(y^2+y+x^3+x+1)"};
  app.require_subcommand(1);

  int max_k = 0;
  Format format = Format::kText;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  std::string element;
  int degree = 0;
  EnumMode mode = EnumMode::kBelow;
  const std::map<std::string, EnumMode> modes{{"below", EnumMode::kBelow}, {"exact", EnumMode::kExact}};
  std::string suite_text = "all";

  CLI::App* table = app.add_subcommand("table", "d_k, ell_k, D_k for 2 <= k <= max_k");
  table->add_option("--max-k", max_k, "Largest k (2..14)")->required();
  table->add_option("--format", format, "text, csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CLI::App* rho = app.add_subcommand("rho", "Coefficients of rho_a");
  rho->add_option("--element", element, "Element of A, e.g. \"x*y+1\"")->required();

  CLI::App* ek = app.add_subcommand("ek", "e_k, D_k and the B, T coefficients");
  ek->add_option("--degree", degree, "k (2..12)")->required();

  CLI::App* en = app.add_subcommand("enumerate", "List A_{<k} or A_k");
  en->add_option("--degree", degree, "k")->required();
  en->add_option("--mode", mode, "below or exact")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite_text, "all, commute, series, division, main, symbols, carlitz");
  verify->add_option("--max-k", max_k, "Size parameter (2..12)")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (table->parsed()) return run_table(max_k, format, out, err);
  if (rho->parsed()) return run_rho(element, out, err);
  if (ek->parsed()) return run_ek(degree, out, err);
  if (en->parsed()) return run_enumerate(degree, mode, out, err);
  const std::optional<Suite> suite = parse_suite(suite_text);
  if (!suite) {
    err << "usage error: unknown suite '" << suite_text << "'\n";
    return kExitUsage;
  }
  return run_verify(*suite, max_k, out, err);
}

}  // namespace drinfeld::cli
