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

#ifndef MONOCOVER_TESTS_TESTING_BRUTE_FORCE_H_
#define MONOCOVER_TESTS_TESTING_BRUTE_FORCE_H_

// Test-only oracles. None of these call into the routines they check: no
// BFS, no matching search, no branch and bound.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monocover/cover.h"
#include "monocover/generators.h"
#include "monocover/graph.h"
#include "monocover/konig.h"

namespace monocover::testing {

template <typename T>
std::vector<T> to_vector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

// Largest independent set by enumerating all 2^n subsets (n <= 24).
inline int naive_alpha(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t subsets = 1u << n;
  std::vector<char> independent(subsets, 0);
  independent[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(adj[low] & rest);
    if (independent[s]) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline int naive_alpha(const ColouredGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return naive_alpha(g.vertex_count(), edges);
}

// τ = |V| - α for any graph; enumerated on the bipartite graph itself.
inline int brute_force_min_vertex_cover(const BipartiteGraph& h) {
  std::vector<std::pair<int, int>> edges;
  for (auto [l, r] : h.edges()) edges.emplace_back(l, h.left_count() + r);
  const int n = h.left_count() + h.right_count();
  return n - naive_alpha(n, edges);
}

inline bool covers_every_edge(const BipartiteGraph& h,
                              const VertexCoverSet& cover) {
  for (auto [l, r] : h.edges()) {
    const bool hit = std::find(cover.left.begin(), cover.left.end(), l) !=
                         cover.left.end() ||
                     std::find(cover.right.begin(), cover.right.end(), r) !=
                         cover.right.end();
    if (!hit) return false;
  }
  return true;
}

// Largest matching by trying every edge subset in order (tiny graphs).
inline int brute_force_matching_number(const BipartiteGraph& h) {
  const auto edges = h.edges();
  std::vector<char> left_used(h.left_count(), 0);
  std::vector<char> right_used(h.right_count(), 0);
  std::function<int(std::size_t)> best_from = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = best_from(i + 1);
    auto [l, r] = edges[i];
    if (!left_used[l] && !right_used[r]) {
      left_used[l] = right_used[r] = 1;
      best = std::max(best, 1 + best_from(i + 1));
      left_used[l] = right_used[r] = 0;
    }
    return best;
  };
  return best_from(0);
}

inline bool is_independent(const ColouredGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

// All-pairs colour-c distances inside `s` by Floyd-Warshall; nullopt if the
// induced subgraph is disconnected.
inline std::optional<int> floyd_diameter(const ColouredGraph& g, Colour c,
                                         const VertexSet& s) {
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const std::size_t k = s.size();
  std::vector<std::vector<int>> d(k, std::vector<int>(k, kInf));
  for (std::size_t i = 0; i < k; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && has_colour(g.mask(s[i], s[j]), c)) d[i][j] = 1;
    }
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
      }
    }
  }
  int diameter = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (d[i][j] >= kInf) return std::nullopt;
      diameter = std::max(diameter, d[i][j]);
    }
  }
  return diameter;
}

// Random instances with a monochromatic component of diameter > f(a) and
// α <= a. Vertices sit at positions 0..L along a spine (one or two per
// position) and belong to one of `a` groups. Role-coloured edges only join
// vertices at most one position apart, so the role diameter is at least L;
// every group is a clique, so α <= a. Edges between groups are sparse and
// mostly in the role colour, which keeps shortcuts rare enough that the
// labelled phase runs often.
struct LayeredInstance {
  ColouredGraph graph;
  int budget = 0;
};

inline LayeredInstance layered_instance(int a, std::uint64_t seed) {
  Rng rng(seed, 0x1a7e5);
  const int length =
      static_cast<int>(f_diameter(a)) + 1 + static_cast<int>(rng.below(4));
  std::vector<int> position;
  std::vector<int> group;
  for (int p = 0; p <= length; ++p) {
    const int copies = rng.bernoulli(0.3) ? 2 : 1;
    for (int c = 0; c < copies; ++c) {
      position.push_back(p);
      group.push_back(static_cast<int>(rng.below(a)));
    }
  }
  const int n = static_cast<int>(position.size());
  const double inter_edge = 0.05 * static_cast<double>(rng.below(5));
  const double inter_other = 0.02 * static_cast<double>(rng.below(3));
  const bool swap_colours = rng.bernoulli(0.5);
  const ColourMask role = swap_colours ? ColourMask::kBlue : ColourMask::kRed;
  const ColourMask other = swap_colours ? ColourMask::kRed : ColourMask::kBlue;

  std::vector<Edge> edges;
  std::vector<char> has_back(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int gap = position[v] - position[u];
      const bool near = gap <= 1;
      std::optional<ColourMask> mask;
      if (group[u] == group[v]) {
        if (near && rng.bernoulli(0.5)) {
          mask = rng.bernoulli(0.2) ? ColourMask::kBoth : role;
        } else {
          mask = other;
        }
      } else if (near && rng.bernoulli(0.5 + inter_edge)) {
        mask = role;
      } else if (rng.bernoulli(inter_other)) {
        mask = other;
      }
      // Keep the spine connected in the role colour.
      if (!mask && gap == 1 && !has_back[v]) mask = role;
      if (mask) {
        edges.push_back({u, v, *mask});
        if (gap == 1 &&
            has_colour(*mask, swap_colours ? Colour::kBlue : Colour::kRed)) {
          has_back[v] = 1;
        }
      }
    }
  }
  // A vertex with no role edge back to the previous position gets one.
  for (int v = 0; v < n; ++v) {
    if (position[v] == 0 || has_back[v]) continue;
    for (int u = v - 1; u >= 0; --u) {
      if (position[u] != position[v] - 1) continue;
      for (Edge& e : edges) {
        if (e.u == u && e.v == v) e.mask = ColourMask::kBoth;
      }
      has_back[v] = 1;
      break;
    }
  }
  return {ColouredGraph(n, std::move(edges)), a};
}

}  // namespace monocover::testing

#endif  // MONOCOVER_TESTS_TESTING_BRUTE_FORCE_H_
