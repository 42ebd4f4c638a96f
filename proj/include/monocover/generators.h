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

#ifndef MONOCOVER_GENERATORS_H_
#define MONOCOVER_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string_view>

#include "monocover/graph.h"

namespace monocover {

// Reproducible random source. The engine is fully specified by the standard,
// and the mappings to doubles and bounded integers are done here rather than
// through <random> distributions, whose output is implementation-defined.
class Rng {
 public:
  // Independent streams per (seed, stream) pair.
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  double uniform();                          // [0, 1)
  std::uint64_t below(std::uint64_t bound);  // [0, bound), bound > 0
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  enum class Kind {
    kGnp,
    kComplete,
    kLongPathGadget,
    kShortcutGadget,
    kSwapGadget,
  };

  Kind kind = Kind::kGnp;
  int n = 0;            // vertex count for kGnp / kComplete
  double p_edge = 0.5;  // kGnp edge density; gadget attachment density
  double p_red = 1.0 / 3;
  double p_blue = 1.0 / 3;
  double p_both = 1.0 / 3;
  std::uint64_t seed = 0;
  int budget = 2;  // gadget scale a; gadgets have α = a

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

std::string_view kind_name(GenSpec::Kind kind);
// Throws InvalidSpec for an unknown name.
GenSpec::Kind parse_kind(std::string_view name);

// Throws InvalidSpec.
void validate(const GenSpec& spec);

// Deterministic in `spec`.
//
// kGnp: each pair is an edge with probability p_edge, coloured red / blue /
//   both with probabilities p_red / p_blue / p_both.
// kComplete: every pair, coloured as above.
// kLongPathGadget: a red path with f(a) + 1 edges whose other pairs are all
//   blue, plus a - 1 independent extra vertices hanging off the path by
//   blue edges. Path edges turn red+blue with probability p_both.
// kShortcutGadget: the same clique with one chord between two vertices
//   close to the path start removed, plus a - 2 extras.
// kSwapGadget: a red spine of f(a) + 1 edges split into two blue cliques
//   whose maximal independent set is two red pendants; the spine start is
//   arranged so that the first label collision reroutes through a swap.
//   a - 2 isolated extras.
ColouredGraph generate(const GenSpec& spec);

}  // namespace monocover

#endif  // MONOCOVER_GENERATORS_H_
