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

#ifndef MONOCOVER_ORACLES_H_
#define MONOCOVER_ORACLES_H_

// Exhaustive ground truth used to certify the constructive routines:
// exact independence number, exact minimum component cover, the cover
// validator and the complete-graph diameter trichotomy.

#include <cstdint>
#include <string>
#include <vector>

#include "monocover/cover_piece.h"
#include "monocover/graph.h"

namespace monocover {

inline constexpr int kDefaultAlphaLimit = 60;
inline constexpr int kDefaultComponentLimit = 22;
inline constexpr int kMaxFolkScanOrder = 5;

// Exact α(g) over edges of any colour. Throws TooLarge above `limit`
// vertices.
int alpha_exact(const ColouredGraph& g, int limit = kDefaultAlphaLimit);

struct CoverViolation {
  int piece = -1;  // -1 for whole-cover violations
  std::string reason;

  friend bool operator==(const CoverViolation&,
                         const CoverViolation&) = default;
};

struct CoverReport {
  bool covers_all = false;
  int piece_count = 0;
  int max_piece_diameter = 0;  // over connected pieces
  int budget = 0;
  std::vector<CoverViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks coverage, piece count <= budget and, per piece, that the induced
// subgraph of its colour is connected with diameter <= f_diameter(budget).
// Violations are reported, never thrown.
CoverReport verify_cover(const ColouredGraph& g, const Cover& cover,
                         int budget);

// Minimum number of monochromatic components covering V(g), by enumerating
// component subsets in order of size. Throws TooLarge when g has more than
// `limit` components of both colours together.
int min_component_cover_exact(const ColouredGraph& g,
                              int limit = kDefaultComponentLimit);

enum class FolkCase { kRedAtMost2, kBlueAtMost2, kBothExactly3 };

const char* folk_case_name(FolkCase c);

// Which case of the complete-graph trichotomy g falls in (red checked
// first). Throws NotComplete, or TrichotomyViolated if no case applies.
FolkCase folk_classify(const ColouredGraph& g);

struct FolkScanSummary {
  int n = 0;
  std::int64_t colourings = 0;
  std::int64_t red_at_most_2 = 0;
  std::int64_t blue_at_most_2 = 0;
  std::int64_t both_exactly_3 = 0;
  std::int64_t violations = 0;
  int max_base_diameter = 0;  // largest base_complete piece diameter

  friend bool operator==(const FolkScanSummary&,
                         const FolkScanSummary&) = default;
};

// Every colouring of K_n with masks {R, B, RB} per edge: classifies each and
// checks base_complete. Throws TooLarge for n > kMaxFolkScanOrder.
FolkScanSummary folk_scan(int n);

// The complete graph K_n whose i-th edge (pairs (u,v), u < v, in
// lexicographic order) gets mask index digit i of `code` in base 3
// (0 = R, 1 = B, 2 = RB).
ColouredGraph complete_colouring(int n, std::int64_t code);

}  // namespace monocover

#endif  // MONOCOVER_ORACLES_H_
