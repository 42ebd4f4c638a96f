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

#ifndef MONOCOVER_GRAPH_H_
#define MONOCOVER_GRAPH_H_

// Two-coloured simple graphs and the monochromatic distance primitives the
// rest of the library is built on. An edge may carry red, blue or both
// colours; an edge carrying both belongs to both colour classes, and two
// vertices are "adjacent" iff some edge of any colour joins them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace monocover {

using Vertex = int;

// A set of vertices, always sorted ascending without repeats.
using VertexSet = std::vector<Vertex>;

enum class Colour : std::uint8_t { kRed, kBlue };

constexpr Colour other(Colour c) {
  return c == Colour::kRed ? Colour::kBlue : Colour::kRed;
}

enum class ColourMask : std::uint8_t {
  kNone = 0,
  kRed = 1,
  kBlue = 2,
  kBoth = 3,
};

constexpr bool has_colour(ColourMask mask, Colour c) {
  return (static_cast<std::uint8_t>(mask) & (c == Colour::kRed ? 1u : 2u)) != 0;
}

constexpr ColourMask mask_of(Colour c) {
  return c == Colour::kRed ? ColourMask::kRed : ColourMask::kBlue;
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  ColourMask mask = ColourMask::kNone;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Shortest-path length, or nullopt when unreachable.
using Distance = std::optional<int>;

// Throws Error (SelfLoop, VertexOutOfRange, UncolouredEdge, DuplicateEdge)
// naming the first offending edge. (u,v) and (v,u) count as duplicates.
void validate(int vertex_count, std::span<const Edge> edges);

// Immutable after construction; the constructor runs validate().
class ColouredGraph {
 public:
  ColouredGraph() = default;
  ColouredGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Canonical edge list: u < v, sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }

  // Sorted neighbours through edges whose mask includes c.
  std::span<const Vertex> neighbours(Vertex v, Colour c) const {
    return c == Colour::kRed ? red_[v] : blue_[v];
  }
  // Sorted neighbours through edges of any colour.
  std::span<const Vertex> neighbours(Vertex v) const { return any_[v]; }

  ColourMask mask(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const {
    return mask(u, v) != ColourMask::kNone;
  }

  // Subgraph induced on `keep` (sorted). Vertex i of the result is keep[i].
  ColouredGraph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> red_;
  std::vector<std::vector<Vertex>> blue_;
  std::vector<std::vector<Vertex>> any_;
  std::vector<std::vector<ColourMask>> any_mask_;
};

// Exact distances in the colour-c subgraph from the nearest source.
std::vector<Distance> mono_bfs(const ColouredGraph& g, Colour c,
                               std::span<const Vertex> sources);

// N^c_{<=d}(v): every vertex within colour-c distance d of v.
VertexSet ball(const ColouredGraph& g, Colour c, Vertex v, int d);

struct Partition {
  std::vector<int> class_of;       // vertex -> class index
  std::vector<VertexSet> classes;  // ordered by smallest member
};

// Components of the colour-c subgraph. Vertices without a c-edge are
// singleton classes.
Partition mono_components(const ColouredGraph& g, Colour c);

// Diameter of the colour-c subgraph induced on `s`; paths may not leave s.
// nullopt when that subgraph is disconnected.
Distance mono_diameter(const ColouredGraph& g, Colour c,
                       std::span<const Vertex> s);

struct EccentricPair {
  Vertex z = 0;
  Vertex w = 0;
  int dist = 0;
};

// Exact diameter of one colour-c component together with a pair realising
// it. z is the lowest-id vertex of maximum eccentricity, w the lowest-id
// vertex farthest from z.
EccentricPair eccentric_pair(const ColouredGraph& g, Colour c,
                             std::span<const Vertex> component);

}  // namespace monocover

#endif  // MONOCOVER_GRAPH_H_
