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

#ifndef MONOCOVER_CLI_H_
#define MONOCOVER_CLI_H_

// Command implementations behind the monocover binary. Each writes its
// document to `out`, diagnostics to `err`, and returns the exit code.

#include <optional>
#include <ostream>
#include <string>

#include "monocover/generators.h"

namespace monocover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// `budget` is a positive integer or "auto" (exact α, up to the oracle's
// vertex limit).
int cmd_cover(const std::string& input_path, const std::string& budget,
              std::ostream& out, std::ostream& err);

// Without `budget` the cover file's own budget is used.
int cmd_verify(const std::string& input_path, const std::string& cover_path,
               std::optional<int> budget, std::ostream& out, std::ostream& err);

int cmd_folk_scan(int n, std::ostream& out, std::ostream& err);

int cmd_export_dot(const std::string& input_path,
                   const std::optional<std::string>& cover_path,
                   std::ostream& out, std::ostream& err);

int cmd_generate(const GenSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace monocover::cli

#endif  // MONOCOVER_CLI_H_
