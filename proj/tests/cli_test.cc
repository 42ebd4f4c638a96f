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

#include "monocover/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "monocover/io.h"
#include "monocover/oracles.h"

namespace monocover::cli {
namespace {

using ::testing::HasSubstr;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        std::filesystem::temp_directory_path() /
        ("monocover_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string write_graph(const std::string& name, const ColouredGraph& g) {
    return write(name, instance_to_json(g).dump());
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CoverEdgelessAuto) {
  const std::string in = write_graph("g.json", ColouredGraph(3, {}));
  EXPECT_EQ(cmd_cover(in, "auto", out_, err_), kExitOk);
  Cover cover = parse_cover(out_.str());
  EXPECT_EQ(cover.budget, 3);
  ASSERT_EQ(cover.pieces.size(), 3u);
  for (const CoverPiece& p : cover.pieces) EXPECT_EQ(p.vertices.size(), 1u);
}

TEST_F(CliTest, CoverCompleteAuto) {
  const std::string in = write_graph(
      "k.json",
      generate({.kind = GenSpec::Kind::kComplete, .n = 8, .seed = 3}));
  EXPECT_EQ(cmd_cover(in, "auto", out_, err_), kExitOk);
  Cover cover = parse_cover(out_.str());
  EXPECT_EQ(cover.budget, 1);
  EXPECT_EQ(cover.pieces.size(), 1u);
}

TEST_F(CliTest, GadgetCoverVerifies) {
  const std::string in = write_graph(
      "g.json", generate({.kind = GenSpec::Kind::kLongPathGadget, .seed = 5}));
  EXPECT_EQ(cmd_cover(in, "auto", out_, err_), kExitInputError);
  EXPECT_THAT(err_.str(), HasSubstr("TooLargeForAuto"));
  out_.str("");
  ASSERT_EQ(cmd_cover(in, "2", out_, err_), kExitOk);
  const std::string cover = write("c.json", out_.str());
  std::ostringstream report;
  EXPECT_EQ(cmd_verify(in, cover, std::nullopt, report, err_), kExitOk);
  EXPECT_THAT(report.str(), HasSubstr("\"covers_all\": true"));
}

TEST_F(CliTest, VerifyDetectsTampering) {
  ColouredGraph g = generate(
      {.kind = GenSpec::Kind::kGnp, .n = 12, .p_edge = 0.3, .seed = 9});
  const std::string in = write_graph("g.json", g);
  ASSERT_EQ(cmd_cover(in, "auto", out_, err_), kExitOk);
  Cover cover = parse_cover(out_.str());

  std::ostringstream ok;
  EXPECT_EQ(cmd_verify(in, write("c.json", out_.str()), std::nullopt, ok, err_),
            kExitOk);

  // Delete a vertex that appears in exactly one piece.
  Cover tampered = cover;
  bool removed = false;
  for (Vertex v = 0; v < g.vertex_count() && !removed; ++v) {
    int holder = -1, count = 0;
    for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
      const VertexSet& vs = cover.pieces[i].vertices;
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
        holder = static_cast<int>(i);
        ++count;
      }
    }
    if (count == 1 && cover.pieces[holder].vertices.size() == 1) {
      tampered.pieces.erase(tampered.pieces.begin() + holder);
      removed = true;
    } else if (count == 1) {
      VertexSet& vs = tampered.pieces[holder].vertices;
      vs.erase(std::find(vs.begin(), vs.end(), v));
      removed = true;
    }
  }
  ASSERT_TRUE(removed);
  std::ostringstream bad;
  EXPECT_EQ(cmd_verify(in, write("t.json", cover_to_json(tampered).dump()),
                       std::nullopt, bad, err_),
            kExitViolation);
  EXPECT_THAT(bad.str(), HasSubstr("uncovered vertex"));
}

TEST_F(CliTest, VerifyDetectsDiameterInflation) {
  // Red path 0..30; the piece {0..30} has diameter 30 > f(1) = 24.
  std::vector<Edge> e;
  for (int i = 0; i < 30; ++i) e.push_back({i, i + 1, ColourMask::kRed});
  ColouredGraph g(31, e);
  const std::string in = write_graph("g.json", g);
  VertexSet all(31);
  for (int i = 0; i < 31; ++i) all[i] = i;
  Cover cover{.budget = 1, .pieces = {{Colour::kRed, all, {}, 24}}};
  const std::string c = write("c.json", cover_to_json(cover).dump());
  EXPECT_EQ(cmd_verify(in, c, std::nullopt, out_, err_), kExitViolation);
  EXPECT_THAT(out_.str(), HasSubstr("piece diameter 30 exceeds 24"));
  std::ostringstream two;
  EXPECT_EQ(cmd_verify(in, c, 2, two, err_), kExitOk);
}

TEST_F(CliTest, InputErrors) {
  const std::string bad = write("bad.json", R"({"n": 2, "edges": [], "x": 1})");
  EXPECT_EQ(cmd_cover(bad, "1", out_, err_), kExitInputError);
  EXPECT_THAT(err_.str(), HasSubstr("ParseError"));
  EXPECT_EQ(cmd_cover((dir_ / "missing.json").string(), "1", out_, err_),
            kExitInputError);
  const std::string in = write_graph("g.json", ColouredGraph(2, {}));
  EXPECT_EQ(cmd_cover(in, "zero", out_, err_), kExitInputError);
  EXPECT_EQ(cmd_cover(in, "0", out_, err_), kExitInputError);
  EXPECT_EQ(cmd_folk_scan(6, out_, err_), kExitInputError);
  EXPECT_EQ(cmd_generate({.n = -3}, out_, err_), kExitInputError);
}

TEST_F(CliTest, BudgetTooSmallIsAViolation) {
  const std::string in = write_graph("g.json", ColouredGraph(3, {}));
  EXPECT_EQ(cmd_cover(in, "2", out_, err_), kExitViolation);
  EXPECT_THAT(err_.str(), HasSubstr("BudgetExhausted"));
}

TEST_F(CliTest, FolkScan) {
  EXPECT_EQ(cmd_folk_scan(2, out_, err_), kExitOk);
  Json two = Json::parse(out_.str());
  EXPECT_EQ(two["colourings"], 3);
  EXPECT_EQ(two["violations"], 0);
  EXPECT_EQ(two["BOTH_EQ_3"], 0);

  std::ostringstream three;
  EXPECT_EQ(cmd_folk_scan(3, three, err_), kExitOk);
  EXPECT_EQ(Json::parse(three.str())["colourings"], 27);
}

TEST_F(CliTest, ExportDot) {
  const std::string in = write_graph(
      "g.json",
      ColouredGraph(3, {{0, 1, ColourMask::kRed}, {1, 2, ColourMask::kBoth}}));
  EXPECT_EQ(cmd_export_dot(in, std::nullopt, out_, err_), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("0 -- 1 [color=red];"));
  EXPECT_THAT(out_.str(), HasSubstr("1 -- 2 [color=purple];"));

  std::ostringstream cover_out;
  ASSERT_EQ(cmd_cover(in, "2", cover_out, err_), kExitOk);
  const std::string c = write("c.json", cover_out.str());
  std::ostringstream overlay;
  EXPECT_EQ(cmd_export_dot(in, c, overlay, err_), kExitOk);
  for (int v = 0; v < 3; ++v) {
    EXPECT_THAT(overlay.str(), HasSubstr(std::to_string(v) + " [label=\"" +
                                         std::to_string(v) + " / 0\"]"));
  }
}

TEST_F(CliTest, GenerateThenCoverIsDeterministic) {
  GenSpec spec{.kind = GenSpec::Kind::kGnp, .n = 18, .p_edge = 0.3, .seed = 77};
  std::ostringstream g1, g2;
  EXPECT_EQ(cmd_generate(spec, g1, err_), kExitOk);
  EXPECT_EQ(cmd_generate(spec, g2, err_), kExitOk);
  EXPECT_EQ(g1.str(), g2.str());
  const std::string in = write("g.json", g1.str());
  std::ostringstream c1, c2;
  EXPECT_EQ(cmd_cover(in, "auto", c1, err_), kExitOk);
  EXPECT_EQ(cmd_cover(in, "auto", c2, err_), kExitOk);
  EXPECT_EQ(c1.str(), c2.str());
  const std::string c = write("c.json", c1.str());
  EXPECT_EQ(cmd_verify(in, c, std::nullopt, out_, err_), kExitOk);
}

}  // namespace
}  // namespace monocover::cli
