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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "drinfeld/cli.hpp"
#include "drinfeld/ekpoly.hpp"
#include "drinfeld/series.hpp"

using drinfeld::AElem;
using drinfeld::KElem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "drinfeld");
  std::ostringstream out;
  std::ostringstream err;
  const int code = drinfeld::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("table text") {
  const Result r = run({"table", "--max-k", "3"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "k=2 d=x^2+x ell=(x^2+x)/(x^2+x+1) D=x^2+x");
  CHECK(l[1].find("D=x^6+x^5+x^4+x^3+x^2+x+1") != std::string::npos);
  CHECK(l[2] == "main theorem for 2 <= k <= 3: OK");
  CHECK(run({"table", "--max-k", "3"}).out == r.out);
}

TEST_CASE("table csv round trip") {
  const Result r = run({"table", "--max-k", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.find("OK") != std::string::npos);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "k,d,ell,D");
  const auto d = drinfeld::d_seq(5);
  const auto ell = drinfeld::ell_seq(5);
  const auto chain = drinfeld::ek_chain(5);
  for (std::size_t row = 1; row < l.size(); ++row) {
    const auto f = split(l[row], ',');
    REQUIRE(f.size() == 4);
    const auto k = static_cast<std::size_t>(std::stoi(f[0]));
    CHECK(k == row + 1);
    CHECK(KElem::parse(f[1]) == d[k]);
    CHECK(KElem::parse(f[2]) == ell[k]);
    CHECK(AElem::parse(f[3]) == chain.D[k]);
  }
}

TEST_CASE("table json lines round trip") {
  const Result r = run({"table", "--max-k", "4", "--format", "json"});
  CHECK(r.code == 0);
  const auto d = drinfeld::d_seq(4);
  const auto ell = drinfeld::ell_seq(4);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  for (const std::string& text : l) {
    const auto j = nlohmann::json::parse(text);
    const auto k = j.at("k").get<std::size_t>();
    CHECK(KElem::parse(j.at("d").get<std::string>()) == d[k]);
    CHECK(KElem::parse(j.at("ell").get<std::string>()) == ell[k]);
    CHECK(AElem::parse(j.at("D").get<std::string>()) == drinfeld::Dk(static_cast<int>(k), drinfeld::DkMode::kEval));
    CHECK(j.at("main_theorem") == "OK");
  }
}

TEST_CASE("table budget") {
  CHECK(run({"table", "--max-k", "1"}).code == 2);
  CHECK(run({"table", "--max-k", "15"}).code == 2);
  CHECK(run({"table", "--max-k", "3", "--format", "xml"}).code == 2);
  CHECK(run({"table"}).code == 2);
}

TEST_CASE("rho") {
  Result r = run({"rho", "--element", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "a = x\ndeg = 2\nrho_0 = x\nrho_1 = x^2+x\nrho_2 = 1\n");
  r = run({"rho", "--element", "y"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 6);
  CHECK(KElem::parse(l[3].substr(8)) == KElem::parse("y^2+y"));
  CHECK(KElem::parse(l[4].substr(8)) == KElem::parse("x*y^2+x*y"));
  r = run({"rho", "--element", "x+1"});
  CHECK(r.out == "a = x+1\ndeg = 2\nrho_0 = x+1\nrho_1 = x^2+x\nrho_2 = 1\n");
  CHECK(run({"rho", "--element", "x^"}).code == 2);
  CHECK(run({"rho", "--element", "y/x"}).code == 2);
  CHECK(run({"rho", "--element", "x^9"}).code == 2);
  CHECK(run({"rho", "--element", "0"}).code == 0);
}

TEST_CASE("ek and enumerate") {
  Result r = run({"ek", "--degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("D_3 = x^6+x^5+x^4+x^3+x^2+x+1\n") != std::string::npos);
  CHECK(r.out.find("T_{3,0} = x^2+x\n") != std::string::npos);
  CHECK(r.out.find("B_{3,1} = x^2+x+1\n") != std::string::npos);
  CHECK(run({"ek", "--degree", "12"}).code == 0);
  CHECK(run({"ek", "--degree", "13"}).code == 2);
  CHECK(run({"ek", "--degree", "1"}).code == 2);

  r = run({"enumerate", "--degree", "3", "--mode", "exact"});
  CHECK(r.out == "y\ny+1\ny+x\ny+x+1\n");
  r = run({"enumerate", "--degree", "4"});
  CHECK(lines(r.out).size() == 8);
  CHECK(run({"enumerate", "--degree", "4", "--mode", "near"}).code == 2);
}

TEST_CASE("verify") {
  Result r = run({"verify", "--suite", "main", "--max-k", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] MAIN k=12: d_12 OK / ell_12 OK\n") != std::string::npos);
  r = run({"verify", "--suite", "carlitz", "--max-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d_6 = product of monics") != std::string::npos);
  CHECK(run({"verify", "--suite", "bogus", "--max-k", "4"}).code == 2);
  CHECK(run({"verify", "--max-k", "13"}).code == 2);
  const Result a = run({"verify", "--suite", "all", "--max-k", "5"});
  CHECK(a.code == 0);
  CHECK(run({"verify", "--suite", "all", "--max-k", "5"}).out == a.out);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
