// Copyright 2026 The monocover Authors
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

// monocover: bounded-diameter monochromatic covers of two-coloured graphs.
//
//   monocover cover      --input g.json --budget auto|<a>
//   monocover verify     --input g.json --cover c.json [--budget <a>]
//   monocover folk-scan  --n <0..5>
//   monocover export-dot --input g.json [--cover c.json]
//   monocover generate   --kind GNP --n 20 --seed 7 [--p-edge ...]

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "monocover/cli.h"
#include "monocover/error.h"
#include "monocover/generators.h"

int main(int argc, char** argv) {
  using namespace monocover;

  CLI::App app{"Bounded-diameter monochromatic covers of 2-coloured graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string cover_path;
  std::string budget = "auto";
  int n = 0;

  auto* cover = app.add_subcommand("cover", "Compute a cover");
  cover->add_option("--input", input, "Instance file")->required();
  cover->add_option("--budget", budget, "Upper bound on α, or 'auto'");

  std::optional<int> verify_budget;
  auto* verify = app.add_subcommand("verify", "Check a cover");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--cover", cover_path, "Cover file")->required();
  verify->add_option("--budget", verify_budget,
                     "Budget (defaults to the cover's own)");

  auto* folk =
      app.add_subcommand("folk-scan", "Classify every colouring of K_n");
  folk->add_option("--n", n, "Order, at most 5")->required();

  std::optional<std::string> dot_cover;
  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  dot->add_option("--input", input, "Instance file")->required();
  dot->add_option("--cover", dot_cover, "Optional cover overlay");

  GenSpec spec;
  std::string kind = "GNP";
  auto* gen = app.add_subcommand("generate", "Write a seeded instance");
  gen->add_option("--kind", kind,
                  "GNP, COMPLETE, LONG_PATH_GADGET, SHORTCUT_GADGET or "
                  "SWAP_GADGET");
  gen->add_option("--n", spec.n, "Vertex count (GNP, COMPLETE)");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--budget", spec.budget, "Gadget scale");
  gen->add_option("--p-edge", spec.p_edge, "Edge probability");
  gen->add_option("--p-red", spec.p_red, "Red-only probability");
  gen->add_option("--p-blue", spec.p_blue, "Blue-only probability");
  gen->add_option("--p-both", spec.p_both, "Both-colour probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  if (*cover) return cli::cmd_cover(input, budget, std::cout, std::cerr);
  if (*verify) {
    return cli::cmd_verify(input, cover_path, verify_budget, std::cout,
                           std::cerr);
  }
  if (*folk) return cli::cmd_folk_scan(n, std::cout, std::cerr);
  if (*dot) return cli::cmd_export_dot(input, dot_cover, std::cout, std::cerr);
  try {
    spec.kind = parse_kind(kind);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInputError;
  }
  return cli::cmd_generate(spec, std::cout, std::cerr);
}
