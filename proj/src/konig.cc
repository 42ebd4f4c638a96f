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

#include "monocover/konig.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "monocover/error.h"

namespace monocover {
namespace {

constexpr int kFree = -1;

struct Mates {
  std::vector<int> of_left;
  std::vector<int> of_right;
};

Mates mates_of(const BipartiteGraph& h, const Matching& m) {
  Mates mates{std::vector<int>(h.left_count(), kFree),
              std::vector<int>(h.right_count(), kFree)};
  for (auto [l, r] : m.pairs) {
    if (l < 0 || l >= h.left_count() || r < 0 || r >= h.right_count() ||
        !h.has_edge(l, r)) {
      throw Error(Errc::kInvalidMatching, "pair (" + std::to_string(l) + "," +
                                              std::to_string(r) +
                                              ") is not an edge");
    }
    if (mates.of_left[l] != kFree || mates.of_right[r] != kFree) {
      throw Error(Errc::kInvalidMatching, "vertex repeated at pair (" +
                                              std::to_string(l) + "," +
                                              std::to_string(r) + ")");
    }
    mates.of_left[l] = r;
    mates.of_right[r] = l;
  }
  return mates;
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& h)
      : h_(h),
        mate_left_(h.left_count(), kFree),
        mate_right_(h.right_count(), kFree),
        layer_(h.left_count()),
        next_edge_(h.left_count()) {}

  Matching run() {
    while (build_layers()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (int l = 0; l < h_.left_count(); ++l) {
        if (mate_left_[l] == kFree) augment(l);
      }
    }
    Matching m;
    for (int l = 0; l < h_.left_count(); ++l) {
      if (mate_left_[l] != kFree) m.pairs.emplace_back(l, mate_left_[l]);
    }
    return m;
  }

 private:
  static constexpr int kUnlayered = std::numeric_limits<int>::max();

  // Layers the left side by alternating distance from the free left
  // vertices; true iff some free right vertex is reachable.
  bool build_layers() {
    std::deque<int> queue;
    for (int l = 0; l < h_.left_count(); ++l) {
      layer_[l] = mate_left_[l] == kFree ? 0 : kUnlayered;
      if (layer_[l] == 0) queue.push_back(l);
    }
    bool reached_free = false;
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop_front();
      for (int r : h_.right_neighbours(l)) {
        int next = mate_right_[r];
        if (next == kFree) {
          reached_free = true;
        } else if (layer_[next] == kUnlayered) {
          layer_[next] = layer_[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return reached_free;
  }

  // Iterative DFS along the layering; each edge is tried once per phase.
  bool augment(int root) {
    std::vector<int> stack{root};
    std::vector<int> via;  // right vertex used to descend from stack[i]
    while (!stack.empty()) {
      int l = stack.back();
      auto nbrs = h_.right_neighbours(l);
      if (next_edge_[l] == static_cast<int>(nbrs.size())) {
        layer_[l] = kUnlayered;  // dead end for this phase
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      int r = nbrs[next_edge_[l]++];
      int next = mate_right_[r];
      if (next == kFree) {
        via.push_back(r);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          mate_left_[stack[i]] = via[i];
          mate_right_[via[i]] = stack[i];
        }
        return true;
      }
      if (layer_[next] == layer_[l] + 1) {
        via.push_back(r);
        stack.push_back(next);
      }
    }
    return false;
  }

  const BipartiteGraph& h_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> layer_;
  std::vector<int> next_edge_;
};

}  // namespace

BipartiteGraph::BipartiteGraph(int left_count, int right_count,
                               std::vector<BipartiteEdge> edges)
    : left_count_(left_count), right_count_(right_count) {
  if (left_count < 0 || right_count < 0) {
    throw Error(Errc::kVertexOutOfRange, "negative side size");
  }
  for (auto [l, r] : edges) {
    if (l < 0 || l >= left_count || r < 0 || r >= right_count) {
      throw Error(Errc::kVertexOutOfRange, "bipartite edge (" +
                                               std::to_string(l) + "," +
                                               std::to_string(r) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(Errc::kDuplicateEdge, "bipartite edge (" +
                                          std::to_string(dup->first) + "," +
                                          std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  adjacency_.resize(left_count_);
  for (auto [l, r] : edges_) adjacency_[l].push_back(r);
}

bool BipartiteGraph::has_edge(int left, int right) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            BipartiteEdge(left, right));
}

Matching max_matching(const BipartiteGraph& h) { return HopcroftKarp(h).run(); }

VertexCoverSet konig_cover(const BipartiteGraph& h, const Matching& m) {
  const Mates mates = mates_of(h, m);
  std::vector<char> left_reached(h.left_count(), 0);
  std::vector<char> right_reached(h.right_count(), 0);
  std::deque<int> queue;
  for (int l = 0; l < h.left_count(); ++l) {
    if (mates.of_left[l] == kFree) {
      left_reached[l] = 1;
      queue.push_back(l);
    }
  }
  // Non-matching edges left->right, matching edges right->left.
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop_front();
    for (int r : h.right_neighbours(l)) {
      if (right_reached[r] || mates.of_left[l] == r) continue;
      right_reached[r] = 1;
      int back = mates.of_right[r];
      if (back == kFree) {
        throw Error(
            Errc::kNotMaximumMatching,
            "augmenting path ends at right vertex " + std::to_string(r));
      }
      if (!left_reached[back]) {
        left_reached[back] = 1;
        queue.push_back(back);
      }
    }
  }
  VertexCoverSet cover;
  for (int l = 0; l < h.left_count(); ++l) {
    if (!left_reached[l]) cover.left.push_back(l);
  }
  for (int r = 0; r < h.right_count(); ++r) {
    if (right_reached[r]) cover.right.push_back(r);
  }
  return cover;
}

Vertex IntersectionGraph::witness(int left, int right) const {
  auto edges = graph.edges();
  auto it =
      std::lower_bound(edges.begin(), edges.end(), BipartiteEdge(left, right));
  if (it == edges.end() || *it != BipartiteEdge(left, right)) {
    throw Error(Errc::kInvalidMatching,
                "no intersection between red component " +
                    std::to_string(left) + " and blue component " +
                    std::to_string(right));
  }
  return witnesses[it - edges.begin()];
}

IntersectionGraph build_intersection(const ColouredGraph& g) {
  Partition red = mono_components(g, Colour::kRed);
  Partition blue = mono_components(g, Colour::kBlue);
  std::vector<std::pair<BipartiteEdge, Vertex>> found;
  // Ascending vertex order makes the first hit per edge its lowest witness.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    found.push_back({{red.class_of[v], blue.class_of[v]}, v});
  }
  std::stable_sort(
      found.begin(), found.end(),
      [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BipartiteEdge> edges;
  std::vector<Vertex> witnesses;
  for (const auto& [edge, v] : found) {
    if (!edges.empty() && edges.back() == edge) continue;
    edges.push_back(edge);
    witnesses.push_back(v);
  }
  IntersectionGraph ig;
  ig.graph =
      BipartiteGraph(static_cast<int>(red.classes.size()),
                     static_cast<int>(blue.classes.size()), std::move(edges));
  ig.red_components = std::move(red.classes);
  ig.blue_components = std::move(blue.classes);
  ig.witnesses = std::move(witnesses);
  return ig;
}

Cover component_cover(const ColouredGraph& g) {
  IntersectionGraph ig = build_intersection(g);
  const Matching m = max_matching(ig.graph);
  const VertexCoverSet selected = konig_cover(ig.graph, m);

  Cover cover;
  cover.budget = selected.size();
  auto emit = [&](Colour c, const VertexSet& component) {
    CoverPiece piece;
    piece.colour = c;
    piece.vertices = component;
    piece.provenance.kind = Provenance::Kind::kComponent;
    piece.certified_diameter_bound = eccentric_pair(g, c, component).dist;
    cover.pieces.push_back(std::move(piece));
  };
  for (int l : selected.left) emit(Colour::kRed, ig.red_components[l]);
  for (int r : selected.right) emit(Colour::kBlue, ig.blue_components[r]);
  return cover;
}

VertexSet independent_witness(const IntersectionGraph& ig, const Matching& m) {
  VertexSet out;
  for (auto [l, r] : m.pairs) out.push_back(ig.witness(l, r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monocover
