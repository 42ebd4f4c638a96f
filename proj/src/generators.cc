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

#include "monocover/generators.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "monocover/cover.h"
#include "monocover/error.h"

namespace monocover {
namespace {

constexpr int kMaxRandomOrder = 100'000;
constexpr int kMaxGadgetBudget = 40;

ColourMask draw_colour(Rng& rng, const GenSpec& spec) {
  const double x = rng.uniform();
  if (x < spec.p_red) return ColourMask::kRed;
  if (x < spec.p_red + spec.p_blue) return ColourMask::kBlue;
  return ColourMask::kBoth;
}

ColouredGraph random_graph(const GenSpec& spec, double p_edge) {
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (p_edge < 1.0 && !rng.bernoulli(p_edge)) continue;
      edges.push_back({u, v, draw_colour(rng, spec)});
    }
  }
  return ColouredGraph(spec.n, std::move(edges));
}

int path_length(int a) { return static_cast<int>(f_diameter(a)) + 1; }

// Path 0..length in red (red+blue with probability p_both), all other
// pairs among path vertices blue, except the pair `missing` if given.
std::vector<Edge> path_clique(Rng& rng, int length, double p_both,
                              std::pair<Vertex, Vertex> missing = {-1, -1}) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u <= length; ++u) {
    for (Vertex v = u + 1; v <= length; ++v) {
      if (std::pair(u, v) == missing) continue;
      if (v == u + 1) {
        edges.push_back(
            {u, v,
             rng.bernoulli(p_both) ? ColourMask::kBoth : ColourMask::kRed});
      } else {
        edges.push_back({u, v, ColourMask::kBlue});
      }
    }
  }
  return edges;
}

// Extras first .. first + count - 1, each joined by blue edges to path
// vertices 0..length with probability p, never to a vertex in `avoid`.
void attach_extras(Rng& rng, std::vector<Edge>& edges, int length, Vertex first,
                   int count, double p, std::span<const Vertex> avoid) {
  for (Vertex x = first; x < first + count; ++x) {
    for (Vertex v = 0; v <= length; ++v) {
      if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
      if (rng.bernoulli(p)) edges.push_back({v, x, ColourMask::kBlue});
    }
  }
}

ColouredGraph long_path_gadget(const GenSpec& spec) {
  Rng rng(spec.seed);
  const int a = spec.budget;
  const int length = path_length(a);
  std::vector<Edge> edges = path_clique(rng, length, spec.p_both);
  // The far end stays free of extras, so it and the extras are independent.
  const Vertex avoid[] = {length};
  attach_extras(rng, edges, length, length + 1, a - 1, spec.p_edge, avoid);
  return ColouredGraph(length + a, std::move(edges));
}

ColouredGraph shortcut_gadget(const GenSpec& spec) {
  Rng rng(spec.seed);
  const int a = spec.budget;
  const int length = path_length(a);
  const int r = static_cast<int>(r_radius(a));
  // Nonadjacent pair inside the radius r - 1 ball around vertex 0, joined
  // through any third path vertex by a blue path of length 2.
  const Vertex p = 1 + static_cast<Vertex>(rng.below(r - 3));
  const Vertex q = p + 2 + static_cast<Vertex>(rng.below(r - 2 - p));
  std::vector<Edge> edges = path_clique(rng, length, spec.p_both, {p, q});
  const Vertex avoid[] = {p, q};
  attach_extras(rng, edges, length, length + 1, a - 2, spec.p_edge, avoid);
  return ColouredGraph(length + a - 1, std::move(edges));
}

// Vertex 0 and 1 are the pendants that form the independent set; spine
// vertex m is m + 2. Spine vertices are split into class A (blue clique with
// vertex 0) and class B (blue clique with vertex 1); consecutive spine
// vertices are joined in red, and different classes are otherwise
// nonadjacent.
ColouredGraph swap_gadget(const GenSpec& spec) {
  Rng rng(spec.seed);
  const int a = spec.budget;
  const int length = path_length(a);
  const int pendant_a = 4 * a + 4;
  const int pendant_b = pendant_a + 2;
  auto spine = [](int m) { return static_cast<Vertex>(m + 2); };

  // true = class A.
  std::vector<bool> in_a(length + 1);
  for (int m = 0; m <= length; ++m) in_a[m] = rng.bernoulli(0.5);
  // The centre starts S; the first vertex at separation 2a + 1 collides
  // with it, and the centre's only red neighbour carries the fresh label.
  in_a[0] = true;
  in_a[1] = false;
  in_a[2 * a + 1] = true;
  in_a[pendant_a] = true;
  in_a[pendant_b] = false;

  std::vector<Edge> edges;
  edges.push_back({0, spine(pendant_a), ColourMask::kRed});
  edges.push_back({1, spine(pendant_b), ColourMask::kRed});
  for (int m = 0; m <= length; ++m) {
    const Vertex pendant = in_a[m] ? 0 : 1;
    if (m != (in_a[m] ? pendant_a : pendant_b)) {
      edges.push_back({pendant, spine(m), ColourMask::kBlue});
    }
    for (int k = m + 1; k <= length; ++k) {
      if (k == m + 1) {
        const bool both = in_a[m] == in_a[k] && rng.bernoulli(spec.p_both);
        edges.push_back(
            {spine(m), spine(k), both ? ColourMask::kBoth : ColourMask::kRed});
      } else if (in_a[m] == in_a[k]) {
        edges.push_back({spine(m), spine(k), ColourMask::kBlue});
      }
    }
  }
  return ColouredGraph(length + 1 + 2 + (a - 2), std::move(edges));
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::string_view kind_name(GenSpec::Kind kind) {
  switch (kind) {
    case GenSpec::Kind::kGnp:
      return "GNP";
    case GenSpec::Kind::kComplete:
      return "COMPLETE";
    case GenSpec::Kind::kLongPathGadget:
      return "LONG_PATH_GADGET";
    case GenSpec::Kind::kShortcutGadget:
      return "SHORTCUT_GADGET";
    case GenSpec::Kind::kSwapGadget:
      return "SWAP_GADGET";
  }
  return "?";
}

GenSpec::Kind parse_kind(std::string_view name) {
  for (auto kind :
       {GenSpec::Kind::kGnp, GenSpec::Kind::kComplete,
        GenSpec::Kind::kLongPathGadget, GenSpec::Kind::kShortcutGadget,
        GenSpec::Kind::kSwapGadget}) {
    if (kind_name(kind) == name) return kind;
  }
  throw Error(Errc::kInvalidSpec, "unknown kind '" + std::string(name) + "'");
}

void validate(const GenSpec& spec) {
  auto bad = [](const std::string& what) {
    throw Error(Errc::kInvalidSpec, what);
  };
  for (double p : {spec.p_edge, spec.p_red, spec.p_blue, spec.p_both}) {
    if (!(p >= 0.0 && p <= 1.0)) bad("probability outside [0,1]");
  }
  if (std::abs(spec.p_red + spec.p_blue + spec.p_both - 1.0) > 1e-9) {
    bad("colour probabilities must sum to 1");
  }
  switch (spec.kind) {
    case GenSpec::Kind::kGnp:
    case GenSpec::Kind::kComplete:
      if (spec.n < 0 || spec.n > kMaxRandomOrder) {
        bad("n = " + std::to_string(spec.n) + " outside 0.." +
            std::to_string(kMaxRandomOrder));
      }
      break;
    case GenSpec::Kind::kLongPathGadget:
    case GenSpec::Kind::kShortcutGadget:
    case GenSpec::Kind::kSwapGadget:
      if (spec.budget < 2 || spec.budget > kMaxGadgetBudget) {
        bad("gadget budget " + std::to_string(spec.budget) + " outside 2.." +
            std::to_string(kMaxGadgetBudget));
      }
      break;
  }
}

ColouredGraph generate(const GenSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GenSpec::Kind::kGnp:
      return random_graph(spec, spec.p_edge);
    case GenSpec::Kind::kComplete:
      return random_graph(spec, 1.0);
    case GenSpec::Kind::kLongPathGadget:
      return long_path_gadget(spec);
    case GenSpec::Kind::kShortcutGadget:
      return shortcut_gadget(spec);
    case GenSpec::Kind::kSwapGadget:
      return swap_gadget(spec);
  }
  throw Error(Errc::kInvalidSpec, "unknown kind");
}

}  // namespace monocover
