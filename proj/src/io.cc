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

#include "monocover/io.h"

#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "monocover/error.h"

namespace monocover {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(Errc::kParseError, what);
}

void only_fields(const Json& j, std::initializer_list<std::string_view> known,
                 const std::string& where) {
  if (!j.is_object()) parse_error(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || key == k;
    if (!ok) parse_error("unknown field '" + key + "' in " + where);
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    parse_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_error(what + " must be an integer");
  const auto value = j.get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    parse_error(what + " out of range");
  }
  return static_cast<int>(value);
}

double as_double(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_error(what + " must be a number");
  return j.get<double>();
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) parse_error(what + " must be a string");
  return j.get<std::string>();
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
}

const char* mask_code(ColourMask m) {
  switch (m) {
    case ColourMask::kRed:
      return "R";
    case ColourMask::kBlue:
      return "B";
    case ColourMask::kBoth:
      return "RB";
    case ColourMask::kNone:
      break;
  }
  return "";
}

ColourMask parse_mask(const std::string& code) {
  if (code == "R") return ColourMask::kRed;
  if (code == "B") return ColourMask::kBlue;
  if (code == "RB") return ColourMask::kBoth;
  parse_error("edge colour '" + code + "' is not R, B or RB");
}

const char* colour_code(Colour c) { return c == Colour::kRed ? "R" : "B"; }

Colour parse_colour(const std::string& code) {
  if (code == "R") return Colour::kRed;
  if (code == "B") return Colour::kBlue;
  parse_error("piece colour '" + code + "' is not R or B");
}

const char* kind_code(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::kComponent:
      return "COMPONENT";
    case Provenance::Kind::kRedBall:
      return "RED_BALL";
    case Provenance::Kind::kBlueBall:
      return "BLUE_BALL";
    case Provenance::Kind::kBaseComplete:
      return "BASE_COMPLETE";
  }
  return "";
}

Provenance parse_provenance(const Json& j) {
  only_fields(j, {"kind", "centre", "radius"}, "provenance");
  const std::string kind = as_string(field(j, "kind", "provenance"), "kind");
  Provenance p;
  for (auto k :
       {Provenance::Kind::kComponent, Provenance::Kind::kRedBall,
        Provenance::Kind::kBlueBall, Provenance::Kind::kBaseComplete}) {
    if (kind == kind_code(k)) p.kind = k;
  }
  if (kind != kind_code(p.kind))
    parse_error("unknown provenance '" + kind + "'");
  const bool is_ball = p.kind == Provenance::Kind::kRedBall ||
                       p.kind == Provenance::Kind::kBlueBall;
  if (is_ball) {
    p.centre = as_int(field(j, "centre", "provenance"), "centre");
    p.radius = as_int(field(j, "radius", "provenance"), "radius");
  } else if (j.contains("centre") || j.contains("radius")) {
    parse_error("centre/radius only apply to balls");
  }
  return p;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const Json j = parse_text(text);
  only_fields(j, {"n", "edges", "generator"}, "instance");
  const int n = as_int(field(j, "n", "instance"), "n");
  const Json& list = field(j, "edges", "instance");
  if (!list.is_array()) parse_error("edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const Json& e : list) {
    only_fields(e, {"u", "v", "c"}, "edge");
    edges.push_back({as_int(field(e, "u", "edge"), "u"),
                     as_int(field(e, "v", "edge"), "v"),
                     parse_mask(as_string(field(e, "c", "edge"), "c"))});
  }
  Instance instance{ColouredGraph(n, std::move(edges)), std::nullopt};
  if (auto it = j.find("generator"); it != j.end()) {
    instance.generator = gen_spec_from_json(*it);
  }
  return instance;
}

Json instance_to_json(const ColouredGraph& g,
                      const std::optional<GenSpec>& generator) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"c", mask_code(e.mask)}});
  }
  Json j = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (generator) j["generator"] = gen_spec_to_json(*generator);
  return j;
}

Cover parse_cover(std::string_view text) {
  const Json j = parse_text(text);
  only_fields(j, {"budget", "pieces"}, "cover");
  Cover cover;
  cover.budget = as_int(field(j, "budget", "cover"), "budget");
  const Json& pieces = field(j, "pieces", "cover");
  if (!pieces.is_array()) parse_error("pieces must be an array");
  for (const Json& p : pieces) {
    only_fields(
        p, {"colour", "vertices", "provenance", "certified_diameter_bound"},
        "piece");
    CoverPiece piece;
    piece.colour =
        parse_colour(as_string(field(p, "colour", "piece"), "colour"));
    const Json& vertices = field(p, "vertices", "piece");
    if (!vertices.is_array()) parse_error("vertices must be an array");
    for (const Json& v : vertices)
      piece.vertices.push_back(as_int(v, "vertex"));
    piece.provenance = parse_provenance(field(p, "provenance", "piece"));
    piece.certified_diameter_bound =
        as_int(field(p, "certified_diameter_bound", "piece"),
               "certified_diameter_bound");
    cover.pieces.push_back(std::move(piece));
  }
  return cover;
}

Json cover_to_json(const Cover& cover) {
  Json pieces = Json::array();
  for (const CoverPiece& piece : cover.pieces) {
    Json provenance = {{"kind", kind_code(piece.provenance.kind)}};
    if (piece.provenance.kind == Provenance::Kind::kRedBall ||
        piece.provenance.kind == Provenance::Kind::kBlueBall) {
      provenance["centre"] = piece.provenance.centre;
      provenance["radius"] = piece.provenance.radius;
    }
    pieces.push_back(
        {{"colour", colour_code(piece.colour)},
         {"vertices", piece.vertices},
         {"provenance", std::move(provenance)},
         {"certified_diameter_bound", piece.certified_diameter_bound}});
  }
  return {{"budget", cover.budget}, {"pieces", std::move(pieces)}};
}

GenSpec gen_spec_from_json(const Json& j) {
  only_fields(
      j, {"kind", "n", "p_edge", "p_red", "p_blue", "p_both", "seed", "budget"},
      "generator");
  GenSpec spec;
  try {
    spec.kind = parse_kind(as_string(field(j, "kind", "generator"), "kind"));
  } catch (const Error& e) {
    parse_error(e.what());
  }
  spec.n = as_int(field(j, "n", "generator"), "n");
  spec.p_edge = as_double(field(j, "p_edge", "generator"), "p_edge");
  spec.p_red = as_double(field(j, "p_red", "generator"), "p_red");
  spec.p_blue = as_double(field(j, "p_blue", "generator"), "p_blue");
  spec.p_both = as_double(field(j, "p_both", "generator"), "p_both");
  const Json& seed = field(j, "seed", "generator");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    parse_error("seed must be an integer");
  }
  spec.seed = seed.get<std::uint64_t>();
  spec.budget = as_int(field(j, "budget", "generator"), "budget");
  return spec;
}

Json gen_spec_to_json(const GenSpec& spec) {
  return {{"kind", std::string(kind_name(spec.kind))},
          {"n", spec.n},
          {"p_edge", spec.p_edge},
          {"p_red", spec.p_red},
          {"p_blue", spec.p_blue},
          {"p_both", spec.p_both},
          {"seed", spec.seed},
          {"budget", spec.budget}};
}

Json report_to_json(const CoverReport& report) {
  Json violations = Json::array();
  for (const CoverViolation& v : report.violations) {
    violations.push_back({{"piece", v.piece}, {"reason", v.reason}});
  }
  return {{"covers_all", report.covers_all},
          {"piece_count", report.piece_count},
          {"max_piece_diameter", report.max_piece_diameter},
          {"budget", report.budget},
          {"violations", std::move(violations)}};
}

Json folk_summary_to_json(const FolkScanSummary& s) {
  return {{"n", s.n},
          {"colourings", s.colourings},
          {"RED_LE_2", s.red_at_most_2},
          {"BLUE_LE_2", s.blue_at_most_2},
          {"BOTH_EQ_3", s.both_exactly_3},
          {"violations", s.violations},
          {"max_base_diameter", s.max_base_diameter}};
}

std::string to_dot(const ColouredGraph& g, const std::optional<Cover>& cover) {
  std::vector<int> piece_of(g.vertex_count(), -1);
  if (cover) {
    for (int i = static_cast<int>(cover->pieces.size()) - 1; i >= 0; --i) {
      for (Vertex v : cover->pieces[i].vertices) {
        if (v >= 0 && v < g.vertex_count()) piece_of[v] = i;
      }
    }
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (cover) {
      out << " [label=\"" << v << " / "
          << (piece_of[v] >= 0 ? std::to_string(piece_of[v]) : "-") << "\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    const char* colour = e.mask == ColourMask::kRed    ? "red"
                         : e.mask == ColourMask::kBlue ? "blue"
                                                       : "purple";
    out << "  " << e.u << " -- " << e.v << " [color=" << colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace monocover
