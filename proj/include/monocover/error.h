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

#ifndef MONOCOVER_ERROR_H_
#define MONOCOVER_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace monocover {

enum class Errc {
  // Graph construction.
  kDuplicateEdge,
  kSelfLoop,
  kVertexOutOfRange,
  kUncolouredEdge,
  // Distance primitives.
  kEmptySourceSet,
  kEmptySet,
  kNotAComponent,
  // Matching.
  kInvalidMatching,
  kNotMaximumMatching,
  // Cover algorithm: caller-facing.
  kNonPositiveBudget,
  kBudgetExhausted,
  kNotComplete,
  // Cover algorithm: internal logic errors. Any of these firing means an
  // invariant of the construction was broken.
  kLabelNotUnique,
  kLabelMissing,
  kCountingFailure,
  kNoVertexAtExactDistance,
  kUnlabelledNeighbour,
  kGoodnessViolated,
  kCoverageGap,
  kTrichotomyViolated,
  // Oracles, generators and I/O.
  kTooLarge,
  kInvalidSpec,
  kParseError,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported as an Error carrying one code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace monocover

#endif  // MONOCOVER_ERROR_H_
