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

#ifndef MONOCOVER_COVER_PIECE_H_
#define MONOCOVER_COVER_PIECE_H_

#include <vector>

#include "monocover/graph.h"

namespace monocover {

// How a piece was produced. Balls carry their centre and radius.
struct Provenance {
  enum class Kind { kComponent, kRedBall, kBlueBall, kBaseComplete };

  Kind kind = Kind::kComponent;
  Vertex centre = -1;
  int radius = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// One monochromatic piece of a cover. `certified_diameter_bound` is an
// upper bound on the diameter of the colour subgraph induced on `vertices`
// that the producer guarantees without a separate check.
struct CoverPiece {
  Colour colour = Colour::kRed;
  VertexSet vertices;
  Provenance provenance;
  int certified_diameter_bound = 0;

  friend bool operator==(const CoverPiece&, const CoverPiece&) = default;
};

struct Cover {
  int budget = 0;
  std::vector<CoverPiece> pieces;

  friend bool operator==(const Cover&, const Cover&) = default;
};

}  // namespace monocover

#endif  // MONOCOVER_COVER_PIECE_H_
