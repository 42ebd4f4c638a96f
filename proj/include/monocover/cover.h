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

#ifndef MONOCOVER_COVER_H_
#define MONOCOVER_COVER_H_

// Covers of a two-coloured graph by at most `a` monochromatic pieces of
// diameter at most 8a^2 + 12a + 4, for any a >= α(g).
//
// The procedure is recursive in the budget a:
//
//   * a == 1: g is complete and one colour spans it with diameter <= 3.
//   * no monochromatic component of diameter >= f(a): cover by components
//     through the Kőnig reduction (konig.h).
//   * otherwise pick a far-reaching centre z in the long component's colour
//     (the "role" colour) and work inside the ball U' of radius r - 1 = f/2 -
//     1:
//       - two nonadjacent vertices of U' joined by a short path in the other
//         colour ("shortcut") allow removing two balls of radius r and
//         recursing with a - 2;
//       - otherwise every vertex of U' far from a maximal independent set I
//         has a unique other-colour neighbour in I, its label. A set S of
//         well-separated vertices with distinct labels is grown one vertex
//         at a time, possibly rerouted along an alternating path, until the
//         alternating closure T of a label collision is label-closed. The
//         radius-2 other-colour balls around the labels of T swallow T and
//         all its neighbours, and the recursion continues with a - |T|.
//
// Every tie is broken by ascending vertex id or FIFO order, so the output is
// a deterministic function of (g, a).

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "monocover/cover_piece.h"
#include "monocover/graph.h"

namespace monocover {

// f(a) = 8a^2 + 12a + 4. Throws NonPositiveBudget for a < 1.
std::int64_t f_diameter(int a);
// r(a) = f(a) / 2 = 4a^2 + 6a + 2.
std::int64_t r_radius(int a);

// Counters for which branches a run of bounded_cover went through.
struct CoverStats {
  int levels = 0;
  int base_cases = 0;
  int component_covers = 0;
  int large_component_hits = 0;
  int shortcuts = 0;
  int extensions = 0;
  int collisions = 0;
  int swaps = 0;
  int removals = 0;

  friend bool operator==(const CoverStats&, const CoverStats&) = default;
};

// At most `budget` pieces covering V(g), each of induced monochromatic
// diameter <= f_diameter(budget). Requires α(g) <= budget; throws
// BudgetExhausted when the recursion runs out of budget on a nonempty
// remainder (which proves the requirement false) and NotComplete when
// budget 1 meets a nonadjacent pair.
Cover bounded_cover(const ColouredGraph& g, int budget,
                    CoverStats* stats = nullptr);

// One piece spanning a complete graph (budget-1 base case). Picks the colour
// of smaller spanning diameter, red on ties. Throws NotComplete or EmptySet.
CoverPiece base_complete(const ColouredGraph& g);

struct LargeComponent {
  Colour role = Colour::kRed;
  Vertex z = 0;
};

// First component (red before blue, components by smallest vertex) whose
// exact diameter is at least f_diameter(a), with z an endpoint of a
// diametral pair.
std::optional<LargeComponent> find_large_component(const ColouredGraph& g,
                                                   int a);

// Lexicographically first pair x < y of distinct nonadjacent vertices within
// role-distance r - 1 of z whose other-colour distance in g is below r.
std::optional<std::pair<Vertex, Vertex>> blue_shortcut(const ColouredGraph& g,
                                                       Colour role, Vertex z,
                                                       int r);

// The labelled ball around z once no shortcut exists.
struct LabelledBall {
  Colour role = Colour::kRed;
  Vertex z = 0;
  int r = 0;
  std::vector<Distance> dist_from_z;  // role distances in g
  VertexSet u_prime;                  // N^role_{<= r-1}(z)
  VertexSet independent;              // greedy maximal independent set of g[U']
  std::vector<Vertex> labels;         // per vertex; kNoLabel if undefined

  static constexpr Vertex kNoLabel = -1;

  std::optional<Vertex> label(Vertex v) const {
    if (labels[v] == kNoLabel) return std::nullopt;
    return labels[v];
  }
  bool in_u_prime(Vertex v) const {
    return dist_from_z[v] && *dist_from_z[v] <= r - 1;
  }
};

// Builds U', I and the labels. A vertex of U' at role-distance >= 2 from I
// gets as label its unique other-colour neighbour in I. Throws
// LabelNotUnique / LabelMissing if that neighbour is not unique / absent,
// which happens only when a shortcut was overlooked.
LabelledBall build_labels(const ColouredGraph& g, Colour role, Vertex z, int r);

// Labelled vertices with different labels are never other-colour adjacent;
// labelled vertices with equal labels are always adjacent. Throws
// LabelNotUnique on a violation.
void check_label_facts(const ColouredGraph& g, const LabelledBall& ball);

// A set S of t vertices in the labelled ball that is "t-good":
//   radius: role-distance from z at most r - a - 2 + t;
//   separation: role-distance at least 2a - 2t + 3 from I and the rest of S;
//   labels: pairwise distinct labels.
struct GoodSetState {
  LabelledBall ball;
  int budget = 0;
  std::vector<Vertex> members;  // S, in insertion order

  int t() const { return static_cast<int>(members.size()); }
};

// Radius and separation bounds for budget a and |S| = t.
inline std::int64_t good_radius(int a, int t) {
  return r_radius(a) - a - 2 + t;
}
inline int good_separation(int a, int t) { return 2 * a - 2 * t + 3; }

// Throws GoodnessViolated naming the first broken condition.
void check_good(const ColouredGraph& g, const GoodSetState& state);

struct Extended {
  GoodSetState state;
};
struct Collision {
  Vertex y0 = 0;
  Vertex s = 0;  // the member of S sharing y0's label
};

// Walks a shortest role path from z to the lowest-id vertex at distance
// r - a - 2 + t and takes the first vertex y0 on it that is far from S and
// I. A fresh label extends S; a repeated label is a collision.
std::variant<Extended, Collision> extend_or_collide(const ColouredGraph& g,
                                                    const GoodSetState& state);

// T grows from s1 along alternating paths y0 s1 y1 s2 ... where s_i y_i is
// a role edge and y_{i-1} s_i an other-colour edge.
struct AlternatingForest {
  struct Link {
    Vertex s = 0;  // member of T we came from
    Vertex y = 0;  // its role neighbour sharing the new member's label
  };

  Vertex y0 = 0;
  Vertex s1 = 0;
  std::vector<Vertex> members;            // T, in discovery order
  std::vector<std::optional<Link>> pred;  // per vertex; s1 has none
};

struct Closed {
  AlternatingForest forest;
};
// An alternating path y0 s1 y1 ... y_{k-1} s_k plus a role neighbour y of
// s_k whose label is not used by S.
struct SwapWitness {
  std::vector<Vertex> path;
  Vertex y = 0;
};

std::variant<Closed, SwapWitness> closure(const ColouredGraph& g,
                                          const GoodSetState& state, Vertex y0,
                                          Vertex s1);

// S' = (S \ {s_1..s_k}) ∪ {y_0..y_{k-1}, y}, which is (t+1)-good.
GoodSetState apply_swap(const ColouredGraph& g, const GoodSetState& state,
                        const SwapWitness& witness);

// Radius-2 other-colour balls around the labels of T. Their union contains
// T and every neighbour of T, so removing it lowers α by at least |T|.
std::vector<CoverPiece> removal_pieces(const ColouredGraph& g,
                                       const GoodSetState& state,
                                       const AlternatingForest& forest);

}  // namespace monocover

#endif  // MONOCOVER_COVER_H_
