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

#include "monocover/graph.h"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "monocover/error.h"

namespace monocover {
namespace {

std::string describe(const Edge& e) {
  return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

void require_vertex(const ColouredGraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(Errc::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph of " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

// BFS from one source in the colour-c subgraph induced on `inside`.
// Returns distances with -1 for unreachable or outside.
std::vector<int> bfs_within(const ColouredGraph& g, Colour c, Vertex source,
                            const std::vector<char>& inside) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(u, c)) {
      if (inside[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<char> membership(const ColouredGraph& g,
                             std::span<const Vertex> s) {
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : s) {
    require_vertex(g, v);
    inside[v] = 1;
  }
  return inside;
}

}  // namespace

void validate(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) {
    throw Error(Errc::kVertexOutOfRange,
                "negative vertex count " + std::to_string(vertex_count));
  }
  std::vector<std::pair<Vertex, Vertex>> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(
          Errc::kVertexOutOfRange,
          describe(e) + " on " + std::to_string(vertex_count) + " vertices");
    }
    if (e.u == e.v) throw Error(Errc::kSelfLoop, describe(e));
    if (e.mask != ColourMask::kRed && e.mask != ColourMask::kBlue &&
        e.mask != ColourMask::kBoth) {
      throw Error(Errc::kUncolouredEdge, describe(e));
    }
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::vector<std::size_t> order(seen.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(
      order.begin(), order.end(),
      [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] == seen[order[i - 1]]) {
      throw Error(Errc::kDuplicateEdge, describe(edges[order[i]]));
    }
  }
}

ColouredGraph::ColouredGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count) {
  validate(vertex_count, edges);
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  edges_ = std::move(edges);

  red_.resize(n_);
  blue_.resize(n_);
  any_.resize(n_);
  any_mask_.resize(n_);
  // Edges are sorted by (u, v), so pushing v onto u's lists keeps them
  // sorted; the reverse direction needs a final sort.
  for (const Edge& e : edges_) {
    for (auto [a, b] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
      any_[a].push_back(b);
      any_mask_[a].push_back(e.mask);
      if (has_colour(e.mask, Colour::kRed)) red_[a].push_back(b);
      if (has_colour(e.mask, Colour::kBlue)) blue_[a].push_back(b);
    }
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(red_[v].begin(), red_[v].end());
    std::sort(blue_[v].begin(), blue_[v].end());
    std::vector<std::size_t> order(any_[v].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return any_[v][a] < any_[v][b];
    });
    std::vector<Vertex> nbrs;
    std::vector<ColourMask> masks;
    nbrs.reserve(order.size());
    masks.reserve(order.size());
    for (std::size_t i : order) {
      nbrs.push_back(any_[v][i]);
      masks.push_back(any_mask_[v][i]);
    }
    any_[v] = std::move(nbrs);
    any_mask_[v] = std::move(masks);
  }
}

ColourMask ColouredGraph::mask(Vertex u, Vertex v) const {
  const auto& nbrs = any_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return ColourMask::kNone;
  return any_mask_[u][it - nbrs.begin()];
}

ColouredGraph ColouredGraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> new_id(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    new_id[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
      kept.push_back({new_id[e.u], new_id[e.v], e.mask});
    }
  }
  return ColouredGraph(static_cast<int>(keep.size()), std::move(kept));
}

std::vector<Distance> mono_bfs(const ColouredGraph& g, Colour c,
                               std::span<const Vertex> sources) {
  if (sources.empty()) {
    throw Error(Errc::kEmptySourceSet, "mono_bfs needs at least one source");
  }
  std::vector<Distance> dist(g.vertex_count());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    require_vertex(g, s);
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(u, c)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet ball(const ColouredGraph& g, Colour c, Vertex v, int d) {
  const Vertex sources[] = {v};
  std::vector<Distance> dist = mono_bfs(g, c, sources);
  VertexSet out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] && *dist[u] <= d) out.push_back(u);
  }
  return out;
}

Partition mono_components(const ColouredGraph& g, Colour c) {
  Partition p;
  p.class_of.assign(g.vertex_count(), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (p.class_of[root] >= 0) continue;
    const int id = static_cast<int>(p.classes.size());
    VertexSet members{root};
    p.class_of[root] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbours(members[head], c)) {
        if (p.class_of[w] < 0) {
          p.class_of[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    p.classes.push_back(std::move(members));
  }
  return p;
}

Distance mono_diameter(const ColouredGraph& g, Colour c,
                       std::span<const Vertex> s) {
  if (s.empty()) throw Error(Errc::kEmptySet, "mono_diameter of empty set");
  const std::vector<char> inside = membership(g, s);
  int diameter = 0;
  for (Vertex v : s) {
    const std::vector<int> dist = bfs_within(g, c, v, inside);
    for (Vertex u : s) {
      if (dist[u] < 0) return std::nullopt;
      diameter = std::max(diameter, dist[u]);
    }
  }
  return diameter;
}

EccentricPair eccentric_pair(const ColouredGraph& g, Colour c,
                             std::span<const Vertex> component) {
  if (component.empty()) {
    throw Error(Errc::kEmptySet, "eccentric_pair of empty component");
  }
  std::vector<char> everywhere(g.vertex_count(), 1);
  const std::vector<char> inside = membership(g, component);
  VertexSet sorted(component.begin(), component.end());
  std::sort(sorted.begin(), sorted.end());

  EccentricPair best{sorted.front(), sorted.front(), -1};
  for (Vertex v : sorted) {
    const std::vector<int> dist = bfs_within(g, c, v, everywhere);
    Vertex far = v;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if ((dist[u] >= 0) != static_cast<bool>(inside[u])) {
        throw Error(Errc::kNotAComponent,
                    "vertex set is not a single colour component");
      }
      if (dist[u] > dist[far]) far = u;
    }
    if (dist[far] > best.dist) best = {v, far, dist[far]};
  }
  return best;
}

}  // namespace monocover
