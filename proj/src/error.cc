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

#include "monocover/error.h"

namespace monocover {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateEdge:
      return "DuplicateEdge";
    case Errc::kSelfLoop:
      return "SelfLoop";
    case Errc::kVertexOutOfRange:
      return "VertexOutOfRange";
    case Errc::kUncolouredEdge:
      return "UncolouredEdge";
    case Errc::kEmptySourceSet:
      return "EmptySourceSet";
    case Errc::kEmptySet:
      return "EmptySet";
    case Errc::kNotAComponent:
      return "NotAComponent";
    case Errc::kInvalidMatching:
      return "InvalidMatching";
    case Errc::kNotMaximumMatching:
      return "NotMaximumMatching";
    case Errc::kNonPositiveBudget:
      return "NonPositiveBudget";
    case Errc::kBudgetExhausted:
      return "BudgetExhausted";
    case Errc::kNotComplete:
      return "NotComplete";
    case Errc::kLabelNotUnique:
      return "LabelNotUnique";
    case Errc::kLabelMissing:
      return "LabelMissing";
    case Errc::kCountingFailure:
      return "CountingFailure";
    case Errc::kNoVertexAtExactDistance:
      return "NoVertexAtExactDistance";
    case Errc::kUnlabelledNeighbour:
      return "UnlabelledNeighbour";
    case Errc::kGoodnessViolated:
      return "GoodnessViolated";
    case Errc::kCoverageGap:
      return "CoverageGap";
    case Errc::kTrichotomyViolated:
      return "TrichotomyViolated";
    case Errc::kTooLarge:
      return "TooLarge";
    case Errc::kInvalidSpec:
      return "InvalidSpec";
    case Errc::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

}  // namespace monocover
