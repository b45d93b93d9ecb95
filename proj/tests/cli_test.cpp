// Copyright 2026 The galdesc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "galdesc/cli.hpp"

namespace fs = std::filesystem;
using namespace galdesc::cli;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// "# flags: --oracle --budget 10" on the first line
Options options_for(const std::string& text, const std::string& source) {
  Options o;
  o.source = source;
  std::istringstream first(text.substr(0, text.find('\n')));
  std::string tok;
  first >> tok;
  if (tok != "#") return o;
  first >> tok;
  if (tok != "flags:") return o;
  while (first >> tok) {
    if (tok == "--oracle") o.oracle = true;
    if (tok == "--budget") first >> o.point_budget;
  }
  return o;
}

std::string transcript(const Result& r) {
  return r.out + "--- stderr\n" + r.err + "--- exit " + std::to_string(r.exit_code) + "\n";
}

std::vector<fs::path> golden_inputs() {
  std::vector<fs::path> v;
  for (const auto& e : fs::directory_iterator(GALDESC_GOLDEN_DIR)) {
    if (e.path().extension() == ".gd") v.push_back(e.path());
  }
  std::sort(v.begin(), v.end());
  return v;
}

Result run_file(const fs::path& p) {
  const std::string text = slurp(p);
  return run_text(text, options_for(text, p.filename().string()));
}

}  // namespace

TEST(Golden, TranscriptsMatch) {
  const auto inputs = golden_inputs();
  ASSERT_GE(inputs.size(), 8u);
  const bool update = std::getenv("GALDESC_UPDATE_GOLDEN") != nullptr;
  for (const auto& p : inputs) {
    SCOPED_TRACE(p.filename().string());
    const std::string got = transcript(run_file(p));
    auto expected_path = p;
    expected_path.replace_extension(".out");
    if (update) {
      std::ofstream(expected_path) << got;
      continue;
    }
    ASSERT_TRUE(fs::exists(expected_path));
    EXPECT_EQ(got, slurp(expected_path));
  }
}

TEST(Golden, ByteIdenticalAcrossRuns) {
  for (const auto& p : golden_inputs()) {
    SCOPED_TRACE(p.filename().string());
    EXPECT_EQ(transcript(run_file(p)), transcript(run_file(p)));
  }
}

TEST(Golden, ExitCodesCoverEveryClass) {
  std::set<int> codes;
  for (const auto& p : golden_inputs()) codes.insert(run_file(p).exit_code);
  EXPECT_EQ(codes, (std::set<int>{kExitOk, kExitValidation, kExitParse, kExitBudget}));
}

// Emitted presentations parse back and validate.
TEST(Golden, PresentationsRoundTrip) {
  std::size_t checked = 0;
  for (const auto& p : golden_inputs()) {
    const Result r = run_file(p);
    if (r.exit_code != kExitOk) continue;
    std::istringstream in(r.out);
    std::string line, fields, last;
    while (std::getline(in, line)) {
      if (line.rfind("field ", 0) == 0) fields += line + "\n";
      if (line.rfind("algebra ", 0) != 0) continue;
      const std::string name = line.substr(8, line.find(' ', 8) - 8);
      SCOPED_TRACE(p.filename().string() + ": " + line);
      const Result back = run_text(fields + line + "\nvalidate " + name + "\n", Options{});
      EXPECT_EQ(back.exit_code, kExitOk) << back.err;
      // the canonical form is a fixed point
      EXPECT_NE(back.out.find(line + "\n"), std::string::npos) << back.out;
      ++checked;
    }
  }
  EXPECT_GE(checked, 5u);
}

struct BadDoc {
  const char* text;
  int exit_code;
  const char* rendered;
};

class Diagnostics : public ::testing::TestWithParam<BadDoc> {};

TEST_P(Diagnostics, LocatedAndClassified) {
  const auto& c = GetParam();
  const Result r = run_text(c.text, Options{});
  EXPECT_EQ(r.exit_code, c.exit_code);
  EXPECT_EQ(r.err, std::string(c.rendered) + "\n");
  EXPECT_TRUE(r.out.empty());
}

INSTANTIATE_TEST_SUITE_P(
    Parse, Diagnostics,
    ::testing::Values(
        BadDoc{"field F = GF(5^2)\nvalidate G\n", kExitParse, "<input>:2:10: error[UnknownName]: unknown name 'G'"},
        BadDoc{"field F = GF(5)\nfield F = QQ\nvalidate F\n", kExitParse,
               "<input>:2:7: error[Redeclared]: 'F' is already declared"},
        BadDoc{"field F = GF(5)\nalgebra A = F[x]\ndescend A\n", kExitParse,
               "<input>:3:9: error[WrongKind]: 'A' is a algebra, expected a datum"},
        BadDoc{"field F = GF(5)\n", kExitParse, "<input>:2:1: error[MissingCommand]: the document has no command"},
        BadDoc{"field F = GF(5)\nvalidate F\nvalidate F\n", kExitParse,
               "<input>:3:1: error[TrailingStatement]: nothing may follow the command"},
        BadDoc{"field F = GF(5)\nalgebra A = F[x] / (x^2 + 1, x ** 2)\nvalidate A\n", kExitParse,
               "<input>:2:33: error[SyntaxError]: unexpected '*'"},
        BadDoc{"field F = GF(6)\nvalidate F\n", kExitValidation,
               "<input>:1:11: error[InvalidArgument]: characteristic 6 is not a supported prime"},
        BadDoc{"field F = Ext(GF(3), modulus=t^2 - 1)\nvalidate F\n", kExitValidation,
               "<input>:1:11: error[NotIrreducible]: t^2 + 2 is reducible over GF(3)"},
        BadDoc{"field F = GF(7)\nalgebra A = F[x]\nvalidate A extra\n", kExitParse,
               "<input>:3:12: error[SyntaxError]: unexpected trailing text"}));

TEST(Cli, BudgetIsAnExitClass) {
  const std::string doc = "field F = GF(2^2)\nalgebra A = F[x, y, z]\nrestrict A over F to k\n";
  Options o;
  o.oracle = true;
  o.point_budget = 5;
  const Result r = run_text("field k = GF(2)\n" + doc, o);
  EXPECT_EQ(r.exit_code, kExitBudget) << r.err;
  o.oracle = false;
  EXPECT_EQ(run_text("field k = GF(2)\n" + doc, o).exit_code, kExitOk);
}

TEST(Cli, ExplicitGroupListCloses) {
  // listing the generator is enough; frob^2 follows by composition
  const Result r = run_text(
      "field F = GF(2^3)\ngroup G = [id: t -> t, frob: t -> t^2, frob2: t -> t^4] over F\n"
      "algebra A = F[x, y, z] / (x*y*z - 1)\n"
      "datum D on A under G : frob => { x -> y, y -> z, z -> x }\n"
      "descend D\n",
      Options{});
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("splits: PASS"), std::string::npos);
}

TEST(Cli, UngeneratedGroupIsRejected) {
  const Result r = run_text(
      "field F = GF(2^2)\nalgebra A = F[x]\ndatum D on A : id => { x -> x }\nvalidate D\n", Options{});
  EXPECT_EQ(r.exit_code, kExitValidation);
  EXPECT_NE(r.err.find("InvalidArgument"), std::string::npos);
}

TEST(Cli, ImplicitRationals) {
  const Result r = run_text("algebra A = QQ[x] / (x^2 - 2)\nvalidate A\n", Options{});
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("field QQ = QQ\nalgebra A = QQ[x]/(x^2 - 2)\n"), std::string::npos) << r.out;
}
