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

// Writes a synthetic corpus for manual runs and for the end-to-end tests.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"synthetic Sorani-script corpus generator"};
  std::string out;
  ats::synthetic::CorpusOptions opt;
  app.add_option("--out", out)->required();
  app.add_option("--docs-per-department", opt.docs_per_department)->capture_default_str();
  app.add_option("--body-words", opt.body_words)->capture_default_str();
  app.add_option("--conclusion-words", opt.conclusion_words)->capture_default_str();
  app.add_option("--abstract-words", opt.abstract_words)->capture_default_str();
  app.add_option("--seed", opt.seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  try {
    const auto docs = ats::synthetic::MakeCorpus(opt);
    ats::synthetic::WriteCorpus(docs, out);
    std::cout << "wrote " << docs.size() << " documents to " << out << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
