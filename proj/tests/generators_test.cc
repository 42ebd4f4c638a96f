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

#include "monocover/generators.h"

#include <set>

#include "gtest/gtest.h"
#include "monocover/cover.h"
#include "monocover/error.h"
#include "monocover/oracles.h"

namespace monocover {
namespace {

Errc spec_error(const GenSpec& spec) {
  try {
    generate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "spec accepted";
  return Errc::kParseError;
}

TEST(RngTest, Deterministic) {
  Rng a(42, 3), b(42, 3), c(42, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, RangesAndBalance) {
  Rng rng(1);
  int heads = 0;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const std::uint64_t k = rng.below(7);
    EXPECT_LT(k, 7u);
    seen.insert(k);
    heads += rng.bernoulli(0.5);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_NEAR(heads, 5000, 300);
  EXPECT_FALSE(Rng(1).bernoulli(0.0));
  EXPECT_TRUE(Rng(1).bernoulli(1.0));
}

TEST(GenerateTest, Examples) {
  EXPECT_EQ(generate({.kind = GenSpec::Kind::kGnp, .n = 0}).vertex_count(), 0);

  ColouredGraph tri = generate({.kind = GenSpec::Kind::kComplete,
                                .n = 3,
                                .p_red = 1,
                                .p_blue = 0,
                                .p_both = 0});
  EXPECT_EQ(tri, ColouredGraph(3, {{0, 1, ColourMask::kRed},
                                   {0, 2, ColourMask::kRed},
                                   {1, 2, ColourMask::kRed}}));

  EXPECT_EQ(generate({.kind = GenSpec::Kind::kGnp, .n = 10, .p_edge = 0})
                .edge_count(),
            0);
  EXPECT_EQ(generate({.kind = GenSpec::Kind::kGnp, .n = 10, .p_edge = 1})
                .edge_count(),
            45);
}

TEST(GenerateTest, SameSeedSameGraph) {
  for (auto kind :
       {GenSpec::Kind::kGnp, GenSpec::Kind::kComplete,
        GenSpec::Kind::kLongPathGadget, GenSpec::Kind::kShortcutGadget,
        GenSpec::Kind::kSwapGadget}) {
    GenSpec spec{.kind = kind, .n = 25, .p_edge = 0.4, .seed = 123};
    EXPECT_EQ(generate(spec), generate(spec)) << kind_name(kind);
    GenSpec other = spec;
    other.seed = 124;
    EXPECT_NE(generate(spec), generate(other)) << kind_name(kind);
  }
}

TEST(GenerateTest, ColourMix) {
  ColouredGraph g = generate({.kind = GenSpec::Kind::kComplete,
                              .n = 60,
                              .p_red = 0.5,
                              .p_blue = 0.25,
                              .p_both = 0.25,
                              .seed = 8});
  int counts[4] = {0, 0, 0, 0};
  for (const Edge& e : g.edges()) ++counts[static_cast<int>(e.mask)];
  const double m = g.edge_count();
  EXPECT_NEAR(counts[static_cast<int>(ColourMask::kRed)] / m, 0.5, 0.05);
  EXPECT_NEAR(counts[static_cast<int>(ColourMask::kBlue)] / m, 0.25, 0.05);
  EXPECT_NEAR(counts[static_cast<int>(ColourMask::kBoth)] / m, 0.25, 0.05);
}

TEST(GenerateTest, RejectsInvalidSpecs) {
  EXPECT_EQ(spec_error({.n = -1}), Errc::kInvalidSpec);
  EXPECT_EQ(spec_error({.n = 5, .p_edge = 1.5}), Errc::kInvalidSpec);
  EXPECT_EQ(spec_error({.n = 5, .p_red = 0.5, .p_blue = 0.2, .p_both = 0.2}),
            Errc::kInvalidSpec);
  EXPECT_EQ(spec_error({.kind = GenSpec::Kind::kSwapGadget, .budget = 1}),
            Errc::kInvalidSpec);
  EXPECT_EQ(spec_error({.kind = GenSpec::Kind::kLongPathGadget, .budget = 41}),
            Errc::kInvalidSpec);
}

TEST(KindTest, Names) {
  for (auto kind :
       {GenSpec::Kind::kGnp, GenSpec::Kind::kComplete,
        GenSpec::Kind::kLongPathGadget, GenSpec::Kind::kShortcutGadget,
        GenSpec::Kind::kSwapGadget}) {
    EXPECT_EQ(parse_kind(kind_name(kind)), kind);
  }
  EXPECT_EQ(kind_name(GenSpec::Kind::kSwapGadget), "SWAP_GADGET");
  EXPECT_THROW(parse_kind("gnp"), Error);
}

TEST(GadgetTest, LongPathHitsLargeComponent) {
  for (int a = 2; a <= 4; ++a) {
    ColouredGraph g = generate(
        {.kind = GenSpec::Kind::kLongPathGadget, .seed = 3, .budget = a});
    EXPECT_EQ(g.vertex_count(), f_diameter(a) + 1 + a);
    auto hit = find_large_component(g, a);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->role, Colour::kRed);
    EXPECT_FALSE(
        blue_shortcut(g, hit->role, hit->z, static_cast<int>(r_radius(a))));
    EXPECT_EQ(alpha_exact(g, g.vertex_count()), a);
  }
}

TEST(GadgetTest, ShortcutGadgetHasShortcut) {
  for (int a = 2; a <= 4; ++a) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      ColouredGraph g = generate(
          {.kind = GenSpec::Kind::kShortcutGadget, .seed = seed, .budget = a});
      auto hit = find_large_component(g, a);
      ASSERT_TRUE(hit);
      EXPECT_TRUE(
          blue_shortcut(g, hit->role, hit->z, static_cast<int>(r_radius(a))));
      EXPECT_EQ(alpha_exact(g, g.vertex_count()), a);
    }
  }
}

TEST(GadgetTest, SwapGadgetSwaps) {
  for (int a = 2; a <= 4; ++a) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      ColouredGraph g = generate(
          {.kind = GenSpec::Kind::kSwapGadget, .seed = seed, .budget = a});
      EXPECT_EQ(alpha_exact(g, g.vertex_count()), a);
      CoverStats stats;
      Cover cover = bounded_cover(g, a, &stats);
      EXPECT_GE(stats.swaps, 1);
      EXPECT_TRUE(verify_cover(g, cover, a).ok());
    }
  }
}

}  // namespace
}  // namespace monocover
