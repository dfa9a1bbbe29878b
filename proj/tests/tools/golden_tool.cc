// Copyright 2026 The ATS Authors.
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

// Renders the golden fixture; with --update the output replaces expected/.

#include <iostream>

#include "CLI11.hpp"
#include "golden.h"

int main(int argc, char** argv) {
  CLI::App app{"golden artifact renderer"};
  std::string fixture, out;
  bool update = false;
  app.add_option("--fixture", fixture)->required();
  app.add_option("--out", out, "render here and diff against expected/");
  app.add_flag("--update", update, "overwrite fixture/expected/");
  CLI11_PARSE(app, argc, argv);
  try {
    const std::filesystem::path target =
        update ? std::filesystem::path(fixture) / "expected" : std::filesystem::path(out);
    if (target.empty()) {
      std::cerr << "either --out or --update is required\n";
      return 2;
    }
    const auto ids = ats::golden::RenderFixture(fixture, target);
    if (update) {
      std::cout << "updated goldens for " << ids.size() << " documents\n";
      return 0;
    }
    const auto problems = ats::golden::CompareWithExpected(fixture, target, ids);
    for (const auto& p : problems) std::cout << p << "\n";
    return problems.empty() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
