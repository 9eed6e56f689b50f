// Copyright 2026 The HLP Authors. All Rights Reserved.
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

// Plain-text dataset and result files.
//
// Vertex file: one vertex name per line. Hyperlink file: one hyperlink per
// line, vertex names separated by tabs. In both, blank lines and lines
// starting with '#' are ignored.

#ifndef HLP_IO_HPP_
#define HLP_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hlp/experiment.hpp"
#include "hlp/hypermatrix.hpp"
#include "hlp/matching.hpp"

namespace hlp {

class VertexIndex {
 public:
  VertexIndex() = default;
  // Throws InvalidInputError on a duplicate or empty name.
  explicit VertexIndex(std::vector<std::string> names);

  Index size() const { return names_.size(); }
  const std::string& name(Index i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> Find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> lookup_;
};

VertexIndex ReadVertices(std::istream& in, std::string_view source);
VertexIndex ReadVerticesFile(const std::filesystem::path& path);

struct ParsedHyperlinks {
  IncidenceMatrix matrix;
  // One message per line whose repeated vertices were dropped.
  std::vector<std::string> warnings;
};

// Throws ParseError naming `source` and the line on an unknown vertex or a
// line with no vertex names.
ParsedHyperlinks ParseIncidence(std::istream& in, const VertexIndex& vertices,
                                std::string_view source);
ParsedHyperlinks ParseIncidenceFile(const std::filesystem::path& path,
                                    const VertexIndex& vertices);

void WriteVertices(std::ostream& out, const VertexIndex& vertices);
void WriteIncidence(std::ostream& out, const IncidenceMatrix& m,
                    const VertexIndex& vertices);

// Writes each line of `header` prefixed with "# ".
void WriteCommentHeader(std::ostream& out, std::string_view header);

inline constexpr std::string_view kResultsColumns =
    "algorithm\tmissing_count\ttrial\tauc\trecovered\truntime_s";
inline constexpr std::string_view kSummaryColumns =
    "algorithm\tmissing_count\ttrials\tauc_mean\tauc_std\trecovered_mean\t"
    "recovered_std";

void WriteRecord(std::ostream& out, const TrialRecord& r);
void WriteSummaryRow(std::ostream& out, const CellSummary& c);

// rank, index, score, hyperlink (space-separated vertex names).
void WriteRanking(std::ostream& out, const IncidenceMatrix& candidates,
                  std::span<const double> scores, const VertexIndex& vertices);

}  // namespace hlp

#endif  // HLP_IO_HPP_
