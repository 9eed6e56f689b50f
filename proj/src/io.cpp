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

#include "hlp/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hlp/error.hpp"

namespace hlp {
namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool Skippable(std::string_view line) {
  return Trim(line).empty() || line.front() == '#';
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

VertexIndex::VertexIndex(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (Index i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInputError("empty vertex name");
    if (!lookup_.emplace(names_[i], i).second) {
      throw InvalidInputError("duplicate vertex name '" + names_[i] + "'");
    }
  }
}

std::optional<Index> VertexIndex::Find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex ReadVertices(std::istream& in, std::string_view source) {
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (Skippable(line)) continue;
    names.emplace_back(Trim(line));
  }
  try {
    return VertexIndex(std::move(names));
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
}

VertexIndex ReadVerticesFile(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ReadVertices(in, path.string());
}

ParsedHyperlinks ParseIncidence(std::istream& in, const VertexIndex& vertices,
                                std::string_view source) {
  ParsedHyperlinks parsed;
  std::vector<std::vector<Index>> columns;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::string where =
        std::string(source) + ":" + std::to_string(line_no);

    std::vector<Index> col;
    std::string_view rest = line;
    while (true) {
      const auto tab = rest.find('\t');
      const std::string_view token = Trim(rest.substr(0, tab));
      if (!token.empty()) {
        auto v = vertices.Find(token);
        if (!v) {
          throw ParseError(where + ": unknown vertex '" + std::string(token) +
                           "'");
        }
        col.push_back(*v);
      }
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (col.empty()) throw ParseError(where + ": empty hyperlink");

    std::sort(col.begin(), col.end());
    const auto dup = std::unique(col.begin(), col.end());
    if (dup != col.end()) {
      col.erase(dup, col.end());
      parsed.warnings.push_back(where + ": repeated vertices dropped");
    }
    columns.push_back(std::move(col));
  }
  parsed.matrix = IncidenceMatrix(vertices.size(), std::move(columns));
  return parsed;
}

ParsedHyperlinks ParseIncidenceFile(const std::filesystem::path& path,
                                    const VertexIndex& vertices) {
  auto in = OpenOrThrow(path);
  return ParseIncidence(in, vertices, path.string());
}

void WriteVertices(std::ostream& out, const VertexIndex& vertices) {
  for (const auto& name : vertices.names()) out << name << '\n';
}

void WriteIncidence(std::ostream& out, const IncidenceMatrix& m,
                    const VertexIndex& vertices) {
  for (const auto& col : m.columns()) {
    for (std::size_t p = 0; p < col.size(); ++p) {
      if (p > 0) out << '\t';
      out << vertices.name(col[p]);
    }
    out << '\n';
  }
}

void WriteCommentHeader(std::ostream& out, std::string_view header) {
  std::istringstream lines{std::string(header)};
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

void WriteRecord(std::ostream& out, const TrialRecord& r) {
  out << r.algorithm << '\t' << r.missing_count << '\t' << r.trial << '\t'
      << r.auc << '\t' << r.recovered << '\t' << r.runtime_s << '\n';
}

void WriteSummaryRow(std::ostream& out, const CellSummary& c) {
  out << c.algorithm << '\t' << c.missing_count << '\t' << c.trials << '\t'
      << c.auc_mean << '\t' << c.auc_std << '\t' << c.recovered_mean << '\t'
      << c.recovered_std << '\n';
}

void WriteRanking(std::ostream& out, const IncidenceMatrix& candidates,
                  std::span<const double> scores, const VertexIndex& vertices) {
  const auto order = RankCandidates(scores);
  out << "rank\tindex\tscore\thyperlink\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t c = order[r];
    out << r + 1 << '\t' << c << '\t' << scores[c] << '\t';
    auto col = candidates.column(c);
    for (std::size_t p = 0; p < col.size(); ++p) {
      if (p > 0) out << ' ';
      out << vertices.name(col[p]);
    }
    out << '\n';
  }
}

}  // namespace hlp
