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

#include "monocover/cover.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "monocover/error.h"
#include "monocover/konig.h"

namespace monocover {
namespace {

constexpr int kMaxBudget = 1'000'000;

std::string str(std::int64_t x) { return std::to_string(x); }

[[noreturn]] void violated(Errc code, const std::string& what) {
  throw Error(code, what);
}

Provenance::Kind ball_kind(Colour c) {
  return c == Colour::kRed ? Provenance::Kind::kRedBall
                           : Provenance::Kind::kBlueBall;
}

CoverPiece ball_piece(const ColouredGraph& g, Colour c, Vertex centre,
                      int radius) {
  CoverPiece piece;
  piece.colour = c;
  piece.vertices = ball(g, c, centre, radius);
  piece.provenance = {ball_kind(c), centre, radius};
  // Any two vertices meet through the centre inside the ball.
  piece.certified_diameter_bound = 2 * radius;
  return piece;
}

int distance_or(const Distance& d, int unreachable) {
  return d ? *d : unreachable;
}

bool far_enough(const Distance& d, int separation) {
  return !d || *d >= separation;
}

// Role distances from one vertex.
std::vector<Distance> role_distances(const ColouredGraph& g, Colour role,
                                     Vertex v) {
  const Vertex sources[] = {v};
  return mono_bfs(g, role, sources);
}

bool other_only(const ColouredGraph& g, Colour role, Vertex u, Vertex v) {
  const ColourMask m = g.mask(u, v);
  return has_colour(m, other(role)) && !has_colour(m, role);
}

// Checks that every s in `set` is at role-distance >= separation from every
// vertex of `independent` and from every other member of `set`.
void check_separation(const ColouredGraph& g, Colour role,
                      std::span<const Vertex> set,
                      std::span<const Vertex> independent, int separation,
                      const char* tag) {
  for (Vertex s : set) {
    const std::vector<Distance> dist = role_distances(g, role, s);
    auto check = [&](Vertex v) {
      if (v != s && !far_enough(dist[v], separation)) {
        violated(Errc::kGoodnessViolated,
                 std::string(tag) + ": vertex " + str(s) +
                     " at role-distance " + str(*dist[v]) + " from " + str(v) +
                     ", need >= " + str(separation));
      }
    };
    for (Vertex v : independent) {
      if (v == s) {
        violated(Errc::kGoodnessViolated, std::string(tag) + ": vertex " +
                                              str(s) +
                                              " lies in the independent set");
      }
      check(v);
    }
    for (Vertex v : set) check(v);
  }
}

// Output of one level of the recursion.
struct LevelOutcome {
  std::vector<CoverPiece> pieces;
  int spent = 0;  // budget consumed
};

LevelOutcome shortcut_level(const ColouredGraph& g, Colour role, Vertex z,
                            int r, Vertex x, Vertex y) {
  LevelOutcome out;
  out.pieces.push_back(ball_piece(g, role, z, r));
  out.pieces.push_back(ball_piece(g, other(role), x, r));
  out.spent = 2;

  std::vector<char> covered(g.vertex_count(), 0);
  for (const CoverPiece& p : out.pieces) {
    for (Vertex v : p.vertices) covered[v] = 1;
  }
  for (Vertex end : {x, y}) {
    if (!covered[end]) {
      violated(Errc::kCoverageGap, "shortcut endpoint " + str(end));
    }
    for (Vertex w : g.neighbours(end)) {
      if (!covered[w]) {
        violated(Errc::kCoverageGap,
                 "neighbour " + str(w) + " of shortcut endpoint " + str(end));
      }
    }
  }
  return out;
}

LevelOutcome labelled_level(const ColouredGraph& g, Colour role, Vertex z,
                            int r, int a, CoverStats& stats) {
  GoodSetState state;
  state.ball = build_labels(g, role, z, r);
  state.budget = a;
  check_label_facts(g, state.ball);
  if (static_cast<int>(state.ball.independent.size()) > a) {
    violated(Errc::kBudgetExhausted, "independent set of size " +
                                         str(state.ball.independent.size()) +
                                         " exceeds budget " + str(a));
  }

  while (true) {
    if (state.t() > a) {
      violated(Errc::kGoodnessViolated, "good set outgrew the budget");
    }
    auto step = extend_or_collide(g, state);
    if (auto* ext = std::get_if<Extended>(&step)) {
      ++stats.extensions;
      state = std::move(ext->state);
      continue;
    }
    const Collision hit = std::get<Collision>(step);
    ++stats.collisions;
    auto closed = closure(g, state, hit.y0, hit.s);
    if (auto* swap = std::get_if<SwapWitness>(&closed)) {
      ++stats.swaps;
      state = apply_swap(g, state, *swap);
      continue;
    }
    const AlternatingForest& forest = std::get<Closed>(closed).forest;
    ++stats.removals;
    LevelOutcome out;
    out.pieces = removal_pieces(g, state, forest);
    out.spent = static_cast<int>(forest.members.size());
    return out;
  }
}

}  // namespace

std::int64_t f_diameter(int a) {
  if (a < 1) violated(Errc::kNonPositiveBudget, "budget " + str(a));
  if (a > kMaxBudget) violated(Errc::kTooLarge, "budget " + str(a));
  const std::int64_t x = a;
  return 8 * x * x + 12 * x + 4;
}

std::int64_t r_radius(int a) { return f_diameter(a) / 2; }

CoverPiece base_complete(const ColouredGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw Error(Errc::kEmptySet, "base_complete of empty graph");
  for (Vertex u = 0; u < n; ++u) {
    if (static_cast<int>(g.neighbours(u).size()) == n - 1) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && !g.adjacent(u, v)) {
        violated(Errc::kNotComplete,
                 "vertices " + str(u) + " and " + str(v) + " are nonadjacent");
      }
    }
  }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  const Distance red = mono_diameter(g, Colour::kRed, all);
  const Distance blue = mono_diameter(g, Colour::kBlue, all);

  CoverPiece piece;
  piece.vertices = std::move(all);
  piece.provenance.kind = Provenance::Kind::kBaseComplete;
  if (red && (!blue || *red <= *blue)) {
    piece.colour = Colour::kRed;
    piece.certified_diameter_bound = *red;
  } else if (blue) {
    piece.colour = Colour::kBlue;
    piece.certified_diameter_bound = *blue;
  } else {
    violated(Errc::kTrichotomyViolated, "neither colour spans the graph");
  }
  if (piece.certified_diameter_bound > 3) {
    violated(Errc::kTrichotomyViolated,
             "spanning diameter " + str(piece.certified_diameter_bound));
  }
  return piece;
}

std::optional<LargeComponent> find_large_component(const ColouredGraph& g,
                                                   int a) {
  const std::int64_t f = f_diameter(a);
  for (Colour c : {Colour::kRed, Colour::kBlue}) {
    const Partition parts = mono_components(g, c);
    for (const VertexSet& component : parts.classes) {
      // Diameter is below the vertex count.
      if (static_cast<std::int64_t>(component.size()) <= f) continue;
      const EccentricPair ep = eccentric_pair(g, c, component);
      if (ep.dist >= f) return LargeComponent{c, ep.z};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> blue_shortcut(const ColouredGraph& g,
                                                       Colour role, Vertex z,
                                                       int r) {
  const std::vector<Distance> from_z = role_distances(g, role, z);
  VertexSet inner;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (from_z[v] && *from_z[v] <= r - 1) inner.push_back(v);
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const Vertex x = inner[i];
    const std::vector<Distance> from_x = role_distances(g, other(role), x);
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const Vertex y = inner[j];
      if (!g.adjacent(x, y) && from_x[y] && *from_x[y] < r) {
        return std::pair(x, y);
      }
    }
  }
  return std::nullopt;
}

LabelledBall build_labels(const ColouredGraph& g, Colour role, Vertex z,
                          int r) {
  LabelledBall lb;
  lb.role = role;
  lb.z = z;
  lb.r = r;
  lb.dist_from_z = role_distances(g, role, z);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lb.in_u_prime(v)) lb.u_prime.push_back(v);
  }

  std::vector<char> in_independent(g.vertex_count(), 0);
  for (Vertex v : lb.u_prime) {
    const auto nbrs = g.neighbours(v);
    const bool blocked = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) {
      return in_independent[w] != 0;
    });
    if (!blocked) {
      in_independent[v] = 1;
      lb.independent.push_back(v);
    }
  }

  lb.labels.assign(g.vertex_count(), LabelledBall::kNoLabel);
  const std::vector<Distance> from_independent =
      mono_bfs(g, role, lb.independent);
  for (Vertex u : lb.u_prime) {
    if (!far_enough(from_independent[u], 2)) continue;
    Vertex found = LabelledBall::kNoLabel;
    for (Vertex w : g.neighbours(u, other(role))) {
      if (!in_independent[w]) continue;
      if (found != LabelledBall::kNoLabel) {
        violated(Errc::kLabelNotUnique, "vertex " + str(u) +
                                            " has independent neighbours " +
                                            str(found) + " and " + str(w));
      }
      found = w;
    }
    if (found == LabelledBall::kNoLabel) {
      violated(Errc::kLabelMissing,
               "vertex " + str(u) + " has no neighbour in the independent set");
    }
    lb.labels[u] = found;
  }
  return lb;
}

void check_label_facts(const ColouredGraph& g, const LabelledBall& ball) {
  VertexSet labelled;
  for (Vertex v : ball.u_prime) {
    if (ball.label(v)) labelled.push_back(v);
  }
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    for (std::size_t j = i + 1; j < labelled.size(); ++j) {
      const Vertex u = labelled[i];
      const Vertex w = labelled[j];
      const ColourMask m = g.mask(u, w);
      if (ball.labels[u] != ball.labels[w]) {
        if (has_colour(m, other(ball.role))) {
          violated(Errc::kLabelNotUnique,
                   "differently labelled " + str(u) + " and " + str(w) +
                       " are adjacent in the label colour");
        }
      } else if (m == ColourMask::kNone) {
        violated(Errc::kLabelNotUnique, "equally labelled " + str(u) + " and " +
                                            str(w) + " are nonadjacent");
      }
    }
  }
}

void check_good(const ColouredGraph& g, const GoodSetState& state) {
  const LabelledBall& lb = state.ball;
  const int a = state.budget;
  const int t = state.t();
  if (t > a) {
    violated(Errc::kGoodnessViolated,
             "t = " + str(t) + " exceeds budget " + str(a));
  }
  const std::int64_t radius = good_radius(a, t);
  for (Vertex s : state.members) {
    if (!lb.dist_from_z[s] || *lb.dist_from_z[s] > radius) {
      violated(Errc::kGoodnessViolated,
               "radius: vertex " + str(s) + " beyond radius " + str(radius));
    }
  }
  check_separation(g, lb.role, state.members, lb.independent,
                   good_separation(a, t), "separation");
  std::vector<Vertex> used;
  for (Vertex s : state.members) {
    const auto label = lb.label(s);
    if (!label) {
      violated(Errc::kGoodnessViolated,
               "labels: vertex " + str(s) + " is unlabelled");
    }
    if (std::find(used.begin(), used.end(), *label) != used.end()) {
      violated(Errc::kGoodnessViolated,
               "labels: label " + str(*label) + " used twice");
    }
    used.push_back(*label);
  }
  for (std::size_t i = 0; i < state.members.size(); ++i) {
    for (std::size_t j = i + 1; j < state.members.size(); ++j) {
      if (g.adjacent(state.members[i], state.members[j])) {
        violated(Errc::kGoodnessViolated, "good set is not independent at " +
                                              str(state.members[i]) + ", " +
                                              str(state.members[j]));
      }
    }
  }
}

std::variant<Extended, Collision> extend_or_collide(const ColouredGraph& g,
                                                    const GoodSetState& state) {
  const LabelledBall& lb = state.ball;
  const int a = state.budget;
  const int t = state.t();
  const std::int64_t depth = good_radius(a, t);

  Vertex x = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (lb.dist_from_z[v] && *lb.dist_from_z[v] == depth) {
      x = v;
      break;
    }
  }
  if (x < 0) {
    violated(Errc::kNoVertexAtExactDistance,
             "no vertex at role-distance " + str(depth) + " from " + str(lb.z));
  }

  // Shortest role path z -> x through lowest-id parents.
  std::vector<Vertex> path{x};
  for (Vertex v = x; v != lb.z;) {
    const int d = *lb.dist_from_z[v];
    for (Vertex w : g.neighbours(v, lb.role)) {
      if (distance_or(lb.dist_from_z[w], -1) == d - 1) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());

  std::vector<Vertex> blockers = lb.independent;
  blockers.insert(blockers.end(), state.members.begin(), state.members.end());
  const std::vector<Distance> from_blockers = mono_bfs(g, lb.role, blockers);
  const int separation = good_separation(a, t);
  auto y0_it = std::find_if(path.begin(), path.end(), [&](Vertex v) {
    return far_enough(from_blockers[v], separation);
  });
  if (y0_it == path.end()) {
    violated(Errc::kCountingFailure,
             "every vertex of a path with " + str(path.size()) +
                 " vertices is within " + str(separation - 1) +
                 " of the good set or the independent set");
  }
  const Vertex y0 = *y0_it;
  const auto label = lb.label(y0);
  if (!label) violated(Errc::kLabelMissing, "y0 = " + str(y0));

  for (Vertex s : state.members) {
    if (lb.labels[s] == *label) {
      if (!other_only(g, lb.role, y0, s)) {
        violated(Errc::kGoodnessViolated, "collision " + str(y0) + "-" +
                                              str(s) +
                                              " is not an other-colour edge");
      }
      return Collision{y0, s};
    }
  }
  Extended ext{state};
  ext.state.members.push_back(y0);
  check_good(g, ext.state);
  return ext;
}

std::variant<Closed, SwapWitness> closure(const ColouredGraph& g,
                                          const GoodSetState& state, Vertex y0,
                                          Vertex s1) {
  const LabelledBall& lb = state.ball;
  std::vector<Vertex> owner(g.vertex_count(), -1);  // label -> member of S
  for (Vertex s : state.members) owner[lb.labels[s]] = s;
  if (std::find(state.members.begin(), state.members.end(), s1) ==
      state.members.end()) {
    violated(Errc::kGoodnessViolated,
             "closure root " + str(s1) + " is not in the good set");
  }

  AlternatingForest forest;
  forest.y0 = y0;
  forest.s1 = s1;
  forest.members.push_back(s1);
  forest.pred.assign(g.vertex_count(), std::nullopt);
  std::vector<char> in_forest(g.vertex_count(), 0);
  in_forest[s1] = 1;

  for (std::size_t head = 0; head < forest.members.size(); ++head) {
    const Vertex s = forest.members[head];
    for (Vertex y : g.neighbours(s, lb.role)) {
      const auto label = lb.label(y);
      if (!label) {
        violated(Errc::kUnlabelledNeighbour,
                 "role neighbour " + str(y) + " of " + str(s));
      }
      const Vertex next = owner[*label];
      if (next < 0) {
        if (state.t() == static_cast<int>(lb.independent.size())) {
          violated(Errc::kGoodnessViolated,
                   "fresh label " + str(*label) + " with every label in use");
        }
        SwapWitness witness;
        witness.y = y;
        for (Vertex cur = s;;) {
          witness.path.push_back(cur);
          const auto& link = forest.pred[cur];
          if (!link) break;
          witness.path.push_back(link->y);
          cur = link->s;
        }
        witness.path.push_back(y0);
        std::reverse(witness.path.begin(), witness.path.end());
        return witness;
      }
      if (in_forest[next]) continue;
      if (!other_only(g, lb.role, y, next)) {
        violated(Errc::kGoodnessViolated, "alternating step " + str(y) + "-" +
                                              str(next) +
                                              " is not an other-colour edge");
      }
      in_forest[next] = 1;
      forest.pred[next] = AlternatingForest::Link{s, y};
      forest.members.push_back(next);
    }
  }

  // Label-closed: every role neighbour of T carries a label of T.
  for (Vertex s : forest.members) {
    for (Vertex y : g.neighbours(s, lb.role)) {
      if (!in_forest[owner[lb.labels[y]]]) {
        violated(Errc::kGoodnessViolated, "closure leaks label of " + str(y));
      }
    }
  }
  return Closed{std::move(forest)};
}

GoodSetState apply_swap(const ColouredGraph& g, const GoodSetState& state,
                        const SwapWitness& witness) {
  const LabelledBall& lb = state.ball;
  const int a = state.budget;
  const int t = state.t();
  const auto& path = witness.path;
  if (path.size() < 2 || path.size() % 2 != 0) {
    violated(Errc::kGoodnessViolated,
             "alternating path of length " + str(path.size()));
  }
  if (t >= static_cast<int>(lb.independent.size())) {
    violated(Errc::kGoodnessViolated, "swap with every label in use");
  }

  // path = y0 s1 y1 s2 ... y_{k-1} s_k
  std::vector<Vertex> leaving;
  std::vector<Vertex> joining;
  for (std::size_t i = 0; i < path.size(); i += 2) {
    joining.push_back(path[i]);
    leaving.push_back(path[i + 1]);
  }
  joining.push_back(witness.y);

  for (std::size_t i = 0; i < leaving.size(); ++i) {
    if (lb.labels[joining[i]] != lb.labels[leaving[i]]) {
      violated(Errc::kGoodnessViolated, "swap pairs " + str(joining[i]) +
                                            " with " + str(leaving[i]) +
                                            " across different labels");
    }
  }
  for (Vertex s : state.members) {
    if (lb.labels[s] == lb.labels[witness.y]) {
      violated(Errc::kGoodnessViolated,
               "swap target " + str(witness.y) + " has a used label");
    }
  }

  GoodSetState next;
  next.ball = lb;
  next.budget = a;
  for (Vertex s : state.members) {
    if (std::find(leaving.begin(), leaving.end(), s) == leaving.end()) {
      next.members.push_back(s);
    }
  }
  if (static_cast<int>(next.members.size()) +
          static_cast<int>(leaving.size()) !=
      t) {
    violated(Errc::kGoodnessViolated, "alternating path leaves the good set");
  }
  next.members.insert(next.members.end(), joining.begin(), joining.end());

  if (next.t() != t + 1) {
    violated(Errc::kGoodnessViolated,
             "swapped set has " + str(next.t()) + " members");
  }
  const std::int64_t radius = good_radius(a, t + 1);
  for (Vertex s : next.members) {
    if (!lb.dist_from_z[s] || *lb.dist_from_z[s] > radius) {
      violated(Errc::kGoodnessViolated,
               "swapped vertex " + str(s) + " beyond radius " + str(radius));
    }
  }
  check_separation(g, lb.role, next.members, lb.independent,
                   good_separation(a, t + 1), "swap");
  check_good(g, next);
  return next;
}

std::vector<CoverPiece> removal_pieces(const ColouredGraph& g,
                                       const GoodSetState& state,
                                       const AlternatingForest& forest) {
  const LabelledBall& lb = state.ball;
  std::vector<CoverPiece> pieces;
  std::vector<char> covered(g.vertex_count(), 0);
  for (Vertex s : forest.members) {
    pieces.push_back(ball_piece(g, other(lb.role), lb.labels[s], 2));
    for (Vertex v : pieces.back().vertices) covered[v] = 1;
  }
  for (Vertex s : forest.members) {
    if (!covered[s]) violated(Errc::kCoverageGap, "closure member " + str(s));
    for (Vertex w : g.neighbours(s)) {
      if (!covered[w]) {
        violated(Errc::kCoverageGap,
                 "neighbour " + str(w) + " of closure member " + str(s));
      }
    }
  }
  return pieces;
}

Cover bounded_cover(const ColouredGraph& g, int budget, CoverStats* stats) {
  CoverStats local;
  CoverStats& st = stats ? *stats : local;
  st = CoverStats{};

  Cover cover;
  cover.budget = budget;
  ColouredGraph current = g;
  std::vector<Vertex> original(g.vertex_count());
  std::iota(original.begin(), original.end(), 0);
  int a = budget;

  while (current.vertex_count() > 0) {
    if (a < 1) {
      violated(Errc::kBudgetExhausted,
               str(current.vertex_count()) + " vertices left uncovered");
    }
    ++st.levels;
    LevelOutcome level;
    if (a == 1) {
      ++st.base_cases;
      level.pieces.push_back(base_complete(current));
      level.spent = 1;
    } else if (auto hit = find_large_component(current, a)) {
      ++st.large_component_hits;
      const int r = static_cast<int>(r_radius(a));
      if (auto pair = blue_shortcut(current, hit->role, hit->z, r)) {
        ++st.shortcuts;
        level = shortcut_level(current, hit->role, hit->z, r, pair->first,
                               pair->second);
      } else {
        level = labelled_level(current, hit->role, hit->z, r, a, st);
      }
    } else {
      ++st.component_covers;
      Cover by_components = component_cover(current);
      if (static_cast<int>(by_components.pieces.size()) > a) {
        violated(Errc::kBudgetExhausted, "component cover needs " +
                                             str(by_components.pieces.size()) +
                                             " pieces, budget " + str(a));
      }
      level.pieces = std::move(by_components.pieces);
      level.spent = a;
    }

    std::vector<char> removed(current.vertex_count(), 0);
    for (CoverPiece& piece : level.pieces) {
      for (Vertex& v : piece.vertices) {
        removed[v] = 1;
        v = original[v];
      }
      if (piece.provenance.centre >= 0) {
        piece.provenance.centre = original[piece.provenance.centre];
      }
      cover.pieces.push_back(std::move(piece));
    }
    VertexSet remaining;
    std::vector<Vertex> remaining_original;
    for (Vertex v = 0; v < current.vertex_count(); ++v) {
      if (!removed[v]) {
        remaining.push_back(v);
        remaining_original.push_back(original[v]);
      }
    }
    current = current.induced(remaining);
    original = std::move(remaining_original);
    a -= level.spent;
  }
  return cover;
}

}  // namespace monocover
