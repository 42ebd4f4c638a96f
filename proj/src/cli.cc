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

#include <charconv>
#include <fstream>
#include <sstream>

#include "monocover/cover.h"
#include "monocover/error.h"
#include "monocover/io.h"
#include "monocover/oracles.h"

namespace monocover::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Errors that mean the cover contract could not be met, as opposed to
// malformed input.
bool is_contract_failure(Errc code) {
  switch (code) {
    case Errc::kParseError:
    case Errc::kDuplicateEdge:
    case Errc::kSelfLoop:
    case Errc::kVertexOutOfRange:
    case Errc::kUncolouredEdge:
    case Errc::kInvalidSpec:
    case Errc::kTooLarge:
    case Errc::kNonPositiveBudget:
      return false;
    default:
      return true;
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return is_contract_failure(e.code()) ? kExitViolation : kExitInputError;
}

std::optional<int> parse_int(const std::string& s) {
  int value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

int cmd_cover(const std::string& input_path, const std::string& budget,
              std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = parse_instance(read_file(input_path));
    int a = 0;
    if (budget == "auto") {
      if (instance.graph.vertex_count() > kDefaultAlphaLimit) {
        err << "error: TooLargeForAuto: " << instance.graph.vertex_count()
            << " vertices exceed the exact oracle limit of "
            << kDefaultAlphaLimit << "; pass an explicit --budget\n";
        return kExitInputError;
      }
      a = alpha_exact(instance.graph);
    } else if (auto value = parse_int(budget); value && *value >= 1) {
      a = *value;
    } else {
      err << "error: budget must be a positive integer or 'auto', got '"
          << budget << "'\n";
      return kExitInputError;
    }
    out << cover_to_json(bounded_cover(instance.graph, a)).dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_verify(const std::string& input_path, const std::string& cover_path,
               std::optional<int> budget, std::ostream& out,
               std::ostream& err) {
  try {
    const Instance instance = parse_instance(read_file(input_path));
    const Cover cover = parse_cover(read_file(cover_path));
    const CoverReport report =
        verify_cover(instance.graph, cover, budget.value_or(cover.budget));
    out << report_to_json(report).dump(2) << "\n";
    return report.ok() ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_folk_scan(int n, std::ostream& out, std::ostream& err) {
  try {
    const FolkScanSummary summary = folk_scan(n);
    out << folk_summary_to_json(summary).dump(2) << "\n";
    return summary.violations == 0 ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_export_dot(const std::string& input_path,
                   const std::optional<std::string>& cover_path,
                   std::ostream& out, std::ostream& err) {
  try {
    const Instance instance = parse_instance(read_file(input_path));
    std::optional<Cover> cover;
    if (cover_path) cover = parse_cover(read_file(*cover_path));
    out << to_dot(instance.graph, cover);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_generate(const GenSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    out << instance_to_json(generate(spec), spec).dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace monocover::cli
