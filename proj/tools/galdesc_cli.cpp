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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "galdesc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Galois and faithfully flat descent over small exact fields"};
  std::string path = "-";
  galdesc::cli::Options opts;
  app.add_option("file", path, "input document, '-' for stdin");
  app.add_flag("--oracle", opts.oracle, "cross-check results against independent computations");
  app.add_option("--budget", opts.point_budget, "maximum candidates for point enumeration");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    opts.source = "<stdin>";
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << path << ": cannot open\n";
      return galdesc::cli::kExitParse;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
    opts.source = path;
  }
  const auto res = galdesc::cli::run_text(text, opts);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
