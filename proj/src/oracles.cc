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

#include "monocover/oracles.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "monocover/cover.h"
#include "monocover/cover_piece.h"
#include "monocover/error.h"
#include "monocover/konig.h"

namespace monocover {
namespace {

// Fixed-width vertex bitset for the exhaustive searches.
class Bits {
 public:
  explicit Bits(int n) : words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(int i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i])
        return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
      }
    }
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  int intersection_count(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & o.words_[i]);
    }
    return c;
  }
  bool all_of(int n) const { return count() == n; }

 private:
  std::vector<std::uint64_t> words_;
};

class IndependenceSearch {
 public:
  explicit IndependenceSearch(const ColouredGraph& g)
      : n_(g.vertex_count()), closed_(n_, Bits(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v].set(v);
      for (Vertex w : g.neighbours(v)) closed_[v].set(w);
    }
  }

  int run() {
    Bits all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    best_ = greedy(all);
    search(all, 0);
    return best_;
  }

 private:
  int degree(int v, const Bits& p) const {
    return closed_[v].intersection_count(p) - 1;
  }

  // Minimum-degree greedy independent set size.
  int greedy(Bits p) const {
    int size = 0;
    while (!p.none()) {
      int pick = -1;
      int low = n_;
      p.for_each([&](int v) {
        int d = degree(v, p);
        if (d < low) {
          low = d;
          pick = v;
        }
      });
      p.subtract(closed_[pick]);
      ++size;
    }
    return size;
  }

  // Greedy clique partition of p; an independent set meets each clique once.
  int clique_cover_bound(Bits p) const {
    int cliques = 0;
    while (!p.none()) {
      Bits candidates = p;
      int v = candidates.first();
      while (v >= 0) {
        p.reset(v);
        candidates.reset(v);
        candidates &= closed_[v];
        v = candidates.first();
      }
      ++cliques;
    }
    return cliques;
  }

  void search(const Bits& p, int size) {
    if (p.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(p) <= best_) return;

    int high = -1, high_deg = -1, low = -1, low_deg = n_;
    p.for_each([&](int v) {
      int d = degree(v, p);
      if (d > high_deg) {
        high_deg = d;
        high = v;
      }
      if (d < low_deg) {
        low_deg = d;
        low = v;
      }
    });
    if (high_deg == 0) {
      best_ = std::max(best_, size + p.count());
      return;
    }
    // A vertex of degree <= 1 is in some maximum independent set.
    if (low_deg <= 1) {
      Bits rest = p;
      rest.subtract(closed_[low]);
      search(rest, size + 1);
      return;
    }
    Bits with = p;
    with.subtract(closed_[high]);
    search(with, size + 1);
    Bits without = p;
    without.reset(high);
    search(without, size);
  }

  int n_;
  std::vector<Bits> closed_;
  int best_ = 0;
};

// Advances `pick` to the next k-subset of {0..m-1} in lexicographic order.
bool next_combination(std::vector<int>& pick, int m) {
  const int k = static_cast<int>(pick.size());
  for (int i = k - 1; i >= 0; --i) {
    if (pick[i] < m - k + i) {
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_complete(const ColouredGraph& g) {
  const std::int64_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int alpha_exact(const ColouredGraph& g, int limit) {
  if (g.vertex_count() > limit) {
    throw Error(Errc::kTooLarge,
                "alpha_exact on " + std::to_string(g.vertex_count()) +
                    " vertices exceeds limit " + std::to_string(limit));
  }
  return IndependenceSearch(g).run();
}

CoverReport verify_cover(const ColouredGraph& g, const Cover& cover,
                         int budget) {
  CoverReport report;
  report.budget = budget;
  report.piece_count = static_cast<int>(cover.pieces.size());
  const int n = g.vertex_count();

  std::int64_t bound = -1;
  if (budget >= 1) {
    bound = f_diameter(budget);
  } else if (!cover.pieces.empty() || n > 0) {
    report.violations.push_back(
        {-1, "non-positive budget " + std::to_string(budget)});
  }
  if (report.piece_count > budget) {
    report.violations.push_back(
        {-1, "piece count " + std::to_string(report.piece_count) +
                 " exceeds budget " + std::to_string(budget)});
  }

  std::vector<char> covered(n, 0);
  for (int i = 0; i < report.piece_count; ++i) {
    const CoverPiece& piece = cover.pieces[i];
    if (piece.vertices.empty()) {
      report.violations.push_back({i, "empty piece"});
      continue;
    }
    VertexSet members = piece.vertices;
    std::sort(members.begin(), members.end());
    if (members.front() < 0 || members.back() >= n) {
      report.violations.push_back({i, "vertex out of range"});
      continue;
    }
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      report.violations.push_back({i, "repeated vertex"});
      continue;
    }
    for (Vertex v : members) covered[v] = 1;
    const Distance diameter = mono_diameter(g, piece.colour, members);
    if (!diameter) {
      report.violations.push_back({i, "disconnected piece"});
      continue;
    }
    report.max_piece_diameter = std::max(report.max_piece_diameter, *diameter);
    if (bound >= 0 && *diameter > bound) {
      report.violations.push_back({i, "piece diameter " +
                                          std::to_string(*diameter) +
                                          " exceeds " + std::to_string(bound)});
    }
  }
  report.covers_all = true;
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) {
      report.covers_all = false;
      report.violations.push_back(
          {-1, "uncovered vertex " + std::to_string(v)});
    }
  }
  return report;
}

int min_component_cover_exact(const ColouredGraph& g, int limit) {
  const int n = g.vertex_count();
  std::vector<Bits> components;
  for (Colour c : {Colour::kRed, Colour::kBlue}) {
    for (const VertexSet& cls : mono_components(g, c).classes) {
      Bits b(n);
      for (Vertex v : cls) b.set(v);
      components.push_back(std::move(b));
    }
  }
  const int m = static_cast<int>(components.size());
  if (m > limit) {
    throw Error(Errc::kTooLarge, std::to_string(m) +
                                     " components exceed limit " +
                                     std::to_string(limit));
  }
  if (n == 0) return 0;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      Bits u(n);
      for (int i : pick) u |= components[i];
      if (u.all_of(n)) return k;
    } while (next_combination(pick, m));
  }
  return m;  // unreachable: all components together cover V
}

const char* folk_case_name(FolkCase c) {
  switch (c) {
    case FolkCase::kRedAtMost2:
      return "RED_LE_2";
    case FolkCase::kBlueAtMost2:
      return "BLUE_LE_2";
    case FolkCase::kBothExactly3:
      return "BOTH_EQ_3";
  }
  return "?";
}

FolkCase folk_classify(const ColouredGraph& g) {
  if (!is_complete(g)) {
    throw Error(Errc::kNotComplete, "folk_classify needs a complete graph");
  }
  if (g.vertex_count() <= 1) return FolkCase::kRedAtMost2;
  VertexSet all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  const Distance red = mono_diameter(g, Colour::kRed, all);
  const Distance blue = mono_diameter(g, Colour::kBlue, all);
  if (red && *red <= 2) return FolkCase::kRedAtMost2;
  if (blue && *blue <= 2) return FolkCase::kBlueAtMost2;
  if (red == 3 && blue == 3) return FolkCase::kBothExactly3;
  throw Error(Errc::kTrichotomyViolated,
              "red diameter " + (red ? std::to_string(*red) : "inf") +
                  ", blue diameter " + (blue ? std::to_string(*blue) : "inf"));
}

ColouredGraph complete_colouring(int n, std::int64_t code) {
  static constexpr ColourMask kMasks[] = {ColourMask::kRed, ColourMask::kBlue,
                                          ColourMask::kBoth};
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v, kMasks[code % 3]});
      code /= 3;
    }
  }
  return ColouredGraph(n, std::move(edges));
}

FolkScanSummary folk_scan(int n) {
  if (n < 0 || n > kMaxFolkScanOrder) {
    throw Error(Errc::kTooLarge, "folk scan order " + std::to_string(n) +
                                     " outside 0.." +
                                     std::to_string(kMaxFolkScanOrder));
  }
  FolkScanSummary summary;
  summary.n = n;
  summary.colourings = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) summary.colourings *= 3;

  for (std::int64_t code = 0; code < summary.colourings; ++code) {
    const ColouredGraph g = complete_colouring(n, code);
    try {
      switch (folk_classify(g)) {
        case FolkCase::kRedAtMost2:
          ++summary.red_at_most_2;
          break;
        case FolkCase::kBlueAtMost2:
          ++summary.blue_at_most_2;
          break;
        case FolkCase::kBothExactly3:
          ++summary.both_exactly_3;
          break;
      }
      if (n > 0) {
        const CoverPiece piece = base_complete(g);
        summary.max_base_diameter =
            std::max(summary.max_base_diameter, piece.certified_diameter_bound);
        const Distance actual = mono_diameter(g, piece.colour, piece.vertices);
        if (!actual || *actual > 3 ||
            *actual != piece.certified_diameter_bound) {
          ++summary.violations;
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::kTrichotomyViolated) throw;
      ++summary.violations;
    }
  }
  return summary;
}

}  // namespace monocover
