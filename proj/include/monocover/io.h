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

#ifndef MONOCOVER_IO_H_
#define MONOCOVER_IO_H_

// JSON documents and DOT export.
//
// Instance: {"n": 3, "edges": [{"u": 0, "v": 1, "c": "R"}, ...]}
//   with c one of "R", "B", "RB" and an optional "generator" object holding
//   the GenSpec that produced it. Unknown fields are rejected.
// Cover: {"budget": 2, "pieces": [{"colour": "R", "vertices": [...],
//   "provenance": {"kind": "RED_BALL", "centre": 0, "radius": 30},
//   "certified_diameter_bound": 60}, ...]}

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "monocover/cover_piece.h"
#include "monocover/generators.h"
#include "monocover/graph.h"
#include "monocover/oracles.h"

namespace monocover {

using Json = nlohmann::json;

struct Instance {
  ColouredGraph graph;
  std::optional<GenSpec> generator;
};

// Parse failures throw ParseError; a well-formed document describing an
// invalid graph throws the corresponding graph error.
Instance parse_instance(std::string_view text);
Json instance_to_json(const ColouredGraph& g,
                      const std::optional<GenSpec>& generator = std::nullopt);

Cover parse_cover(std::string_view text);
Json cover_to_json(const Cover& cover);

GenSpec gen_spec_from_json(const Json& j);
Json gen_spec_to_json(const GenSpec& spec);

Json report_to_json(const CoverReport& report);
Json folk_summary_to_json(const FolkScanSummary& summary);

// Undirected DOT. Edge colours red / blue / purple (both). With a cover,
// each vertex is labelled with the index of the first piece containing it.
std::string to_dot(const ColouredGraph& g,
                   const std::optional<Cover>& cover = std::nullopt);

}  // namespace monocover

#endif  // MONOCOVER_IO_H_
