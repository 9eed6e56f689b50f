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

#include "hlp/hypermatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hlp/error.hpp"

namespace hlp {
namespace {

bool CellLess(const AdjacencyEntry& a, const AdjacencyEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

bool SameCell(const AdjacencyEntry& a, const AdjacencyEntry& b) {
  return a.row == b.row && a.col == b.col;
}

void CheckSameDim(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                  const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": incompatible dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
}

// Keeps cells of x whose presence in `support` equals `keep_present`.
AdjacencyMatrix Mask(const AdjacencyMatrix& x, const AdjacencyMatrix& support,
                     bool keep_present) {
  std::vector<AdjacencyEntry> kept;
  auto xs = x.entries();
  auto ss = support.entries();
  auto s = ss.begin();
  for (const auto& e : xs) {
    while (s != ss.end() && CellLess(*s, e)) ++s;
    const bool present = s != ss.end() && SameCell(*s, e);
    if (present == keep_present) kept.push_back(e);
  }
  return AdjacencyMatrix::FromEntries(x.dim(), std::move(kept));
}

}  // namespace

IncidenceMatrix::IncidenceMatrix(Index num_vertices,
                                 std::vector<std::vector<Index>> columns)
    : num_vertices_(num_vertices), columns_(std::move(columns)) {
  for (Index c = 0; c < columns_.size(); ++c) {
    auto& col = columns_[c];
    if (col.empty()) {
      throw InvalidInputError("hyperlink " + std::to_string(c) + " is empty");
    }
    std::sort(col.begin(), col.end());
    if (col.back() >= num_vertices_) {
      throw InvalidInputError("hyperlink " + std::to_string(c) +
                              " references vertex " +
                              std::to_string(col.back()) + " but there are " +
                              std::to_string(num_vertices_) + " vertices");
    }
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw InvalidInputError("hyperlink " + std::to_string(c) +
                              " repeats a vertex");
    }
  }
}

IncidenceMatrix IncidenceMatrix::Select(
    std::span<const Index> column_ids) const {
  std::vector<std::vector<Index>> picked;
  picked.reserve(column_ids.size());
  for (Index id : column_ids) picked.push_back(columns_.at(id));
  return IncidenceMatrix(num_vertices_, std::move(picked));
}

IncidenceMatrix IncidenceMatrix::Concat(const IncidenceMatrix& other) const {
  if (other.num_vertices_ != num_vertices_) {
    throw DimensionError("Concat: vertex counts differ (" +
                         std::to_string(num_vertices_) + " vs " +
                         std::to_string(other.num_vertices_) + ")");
  }
  auto all = columns_;
  all.insert(all.end(), other.columns_.begin(), other.columns_.end());
  return IncidenceMatrix(num_vertices_, std::move(all));
}

bool IncidenceMatrix::Contains(std::span<const Index> vertex_set) const {
  std::vector<Index> key(vertex_set.begin(), vertex_set.end());
  std::sort(key.begin(), key.end());
  return std::any_of(columns_.begin(), columns_.end(),
                     [&](const auto& col) { return col == key; });
}

AdjacencyMatrix AdjacencyMatrix::FromEntries(
    Index dim, std::vector<AdjacencyEntry> entries) {
  for (auto& e : entries) {
    if (e.row >= dim || e.col >= dim) {
      throw InvalidInputError("adjacency cell (" + std::to_string(e.row) +
                              ", " + std::to_string(e.col) +
                              ") outside dimension " + std::to_string(dim));
    }
    if (!std::isfinite(e.value)) {
      throw InvalidInputError("adjacency cell (" + std::to_string(e.row) +
                              ", " + std::to_string(e.col) +
                              ") is not finite");
    }
    if (e.row > e.col) std::swap(e.row, e.col);
  }
  std::stable_sort(entries.begin(), entries.end(), CellLess);

  AdjacencyMatrix m(dim);
  m.entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!m.entries_.empty() && SameCell(m.entries_.back(), e)) {
      m.entries_.back().value += e.value;
    } else {
      m.entries_.push_back(e);
    }
  }
  return m;
}

std::optional<double> AdjacencyMatrix::Find(Index i, Index j) const {
  if (i > j) std::swap(i, j);
  const AdjacencyEntry key{i, j, 0.0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, CellLess);
  if (it == entries_.end() || !SameCell(*it, key)) return std::nullopt;
  return it->value;
}

AdjacencyMatrix operator+(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  CheckSameDim(a, b, "operator+");
  std::vector<AdjacencyEntry> all(a.entries().begin(), a.entries().end());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return AdjacencyMatrix::FromEntries(a.dim(), std::move(all));
}

AdjacencyMatrix Project(const IncidenceMatrix& s) {
  std::vector<AdjacencyEntry> cells;
  for (const auto& col : s.columns()) {
    for (std::size_t p = 0; p < col.size(); ++p) {
      for (std::size_t q = p; q < col.size(); ++q) {
        cells.push_back({col[p], col[q], 1.0});
      }
    }
  }
  return AdjacencyMatrix::FromEntries(s.num_vertices(), std::move(cells));
}

AdjacencyMatrix MaskOn(const AdjacencyMatrix& x,
                       const AdjacencyMatrix& support) {
  CheckSameDim(x, support, "MaskOn");
  return Mask(x, support, /*keep_present=*/true);
}

AdjacencyMatrix MaskOff(const AdjacencyMatrix& x,
                        const AdjacencyMatrix& support) {
  CheckSameDim(x, support, "MaskOff");
  return Mask(x, support, /*keep_present=*/false);
}

Decomposition Decompose(const AdjacencyMatrix& a,
                        const AdjacencyMatrix& delta) {
  CheckSameDim(a, delta, "Decompose");
  return {a + MaskOn(delta, a), MaskOff(delta, a)};
}

AdjacencyMatrix WeightedOuter(const IncidenceMatrix& u,
                              std::span<const double> weights) {
  if (weights.size() != u.num_columns()) {
    throw DimensionError("WeightedOuter: " + std::to_string(weights.size()) +
                         " weights for " + std::to_string(u.num_columns()) +
                         " columns");
  }
  std::vector<AdjacencyEntry> cells;
  for (Index c = 0; c < u.num_columns(); ++c) {
    const double w = weights[c];
    if (!std::isfinite(w)) {
      throw InvalidInputError("WeightedOuter: weight " + std::to_string(c) +
                              " is not finite");
    }
    if (w == 0.0) continue;
    auto col = u.column(c);
    for (std::size_t p = 0; p < col.size(); ++p) {
      for (std::size_t q = p; q < col.size(); ++q) {
        cells.push_back({col[p], col[q], w});
      }
    }
  }
  return AdjacencyMatrix::FromEntries(u.num_vertices(), std::move(cells));
}

AdjacencyMatrix AddWeightedOuter(const AdjacencyMatrix& a,
                                 const IncidenceMatrix& u,
                                 std::span<const double> weights,
                                 bool restrict_to_a) {
  if (u.num_vertices() != a.dim()) {
    throw DimensionError("AddWeightedOuter: candidate vertex count " +
                         std::to_string(u.num_vertices()) +
                         " differs from adjacency dimension " +
                         std::to_string(a.dim()));
  }
  auto outer = WeightedOuter(u, weights);
  return restrict_to_a ? a + MaskOn(outer, a) : a + outer;
}

}  // namespace hlp
