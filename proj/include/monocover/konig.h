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

#ifndef MONOCOVER_KONIG_H_
#define MONOCOVER_KONIG_H_

// Bipartite matching, the Kőnig vertex cover it certifies, and the
// red/blue component intersection graph that turns a vertex cover into a
// cover of a coloured graph by monochromatic components.

#include <span>
#include <utility>
#include <vector>

#include "monocover/cover_piece.h"
#include "monocover/graph.h"

namespace monocover {

using BipartiteEdge = std::pair<int, int>;  // (left, right)

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws VertexOutOfRange or DuplicateEdge.
  BipartiteGraph(int left_count, int right_count,
                 std::vector<BipartiteEdge> edges);

  int left_count() const { return left_count_; }
  int right_count() const { return right_count_; }
  // Sorted, unique.
  std::span<const BipartiteEdge> edges() const { return edges_; }
  std::span<const int> right_neighbours(int left) const {
    return adjacency_[left];
  }
  bool has_edge(int left, int right) const;

 private:
  int left_count_ = 0;
  int right_count_ = 0;
  std::vector<BipartiteEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

struct Matching {
  std::vector<BipartiteEdge> pairs;  // sorted by left index

  int size() const { return static_cast<int>(pairs.size()); }
};

struct VertexCoverSet {
  std::vector<int> left;
  std::vector<int> right;

  int size() const { return static_cast<int>(left.size() + right.size()); }
};

// Maximum-cardinality matching (Hopcroft-Karp).
Matching max_matching(const BipartiteGraph& h);

// Vertex cover of size |m| from alternating reachability out of the
// unmatched left vertices: unreached left vertices plus reached right
// vertices. Throws InvalidMatching if m is not a matching of h and
// NotMaximumMatching if the search finds an augmenting path.
VertexCoverSet konig_cover(const BipartiteGraph& h, const Matching& m);

// Left side = red components, right side = blue components, one edge per
// nonempty intersection. witness(e) is the lowest vertex in it.
struct IntersectionGraph {
  BipartiteGraph graph;
  std::vector<VertexSet> red_components;
  std::vector<VertexSet> blue_components;
  std::vector<Vertex> witnesses;  // parallel to graph.edges()

  Vertex witness(int left, int right) const;
};

IntersectionGraph build_intersection(const ColouredGraph& g);

// Cover by the components selected by a Kőnig cover of the intersection
// graph. Piece count equals the matching number, which is at most α(g).
Cover component_cover(const ColouredGraph& g);

// One witness vertex per matching edge. The result is independent in g.
VertexSet independent_witness(const IntersectionGraph& ig, const Matching& m);

}  // namespace monocover

#endif  // MONOCOVER_KONIG_H_
