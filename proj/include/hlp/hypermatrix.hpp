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

// Incidence and adjacency matrices of a hypergraph.
//
// An IncidenceMatrix stores one sorted vertex set per hyperlink (column). An
// AdjacencyMatrix is a symmetric sparse matrix whose absent entries are
// "empty". Empty is a structural property: a stored 0.0 is a nonempty entry
// whose value happens to be zero, and masking only looks at structure.

#ifndef HLP_HYPERMATRIX_HPP_
#define HLP_HYPERMATRIX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hlp {

using Index = std::size_t;

class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;

  // Takes one vertex list per hyperlink. Lists are sorted on construction.
  // Throws InvalidInputError on an empty column, a vertex index outside
  // [0, num_vertices) or a vertex repeated within a column.
  IncidenceMatrix(Index num_vertices, std::vector<std::vector<Index>> columns);

  Index num_vertices() const { return num_vertices_; }
  Index num_columns() const { return columns_.size(); }
  std::span<const Index> column(Index c) const { return columns_.at(c); }
  const std::vector<std::vector<Index>>& columns() const { return columns_; }

  // Columns picked by position, in the given order.
  IncidenceMatrix Select(std::span<const Index> column_ids) const;

  // Columns of `other` appended after this matrix's columns.
  IncidenceMatrix Concat(const IncidenceMatrix& other) const;

  bool Contains(std::span<const Index> vertex_set) const;

  friend bool operator==(const IncidenceMatrix&,
                         const IncidenceMatrix&) = default;

 private:
  Index num_vertices_ = 0;
  std::vector<std::vector<Index>> columns_;
};

// Upper-triangle storage cell. Always row <= col.
struct AdjacencyEntry {
  Index row = 0;
  Index col = 0;
  double value = 0.0;

  friend bool operator==(const AdjacencyEntry&,
                         const AdjacencyEntry&) = default;
};

class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;

  // All-empty matrix of the given dimension.
  explicit AdjacencyMatrix(Index dim) : dim_(dim) {}

  // Builds from (i, j, value) triples in any order. (i, j) and (j, i) name
  // the same cell; repeated cells are summed in input order. Throws
  // InvalidInputError on an out-of-range index or a non-finite value.
  static AdjacencyMatrix FromEntries(Index dim,
                                     std::vector<AdjacencyEntry> entries);

  Index dim() const { return dim_; }

  // Number of stored cells in the upper triangle, diagonal included.
  std::size_t stored_count() const { return entries_.size(); }
  bool all_empty() const { return entries_.empty(); }

  bool Has(Index i, Index j) const { return Find(i, j).has_value(); }
  std::optional<double> Find(Index i, Index j) const;

  // Value at (i, j); empty cells read as 0.
  double At(Index i, Index j) const { return Find(i, j).value_or(0.0); }

  // Stored cells sorted by (row, col), row <= col.
  std::span<const AdjacencyEntry> entries() const { return entries_; }

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;

 private:
  Index dim_ = 0;
  std::vector<AdjacencyEntry> entries_;
};

// Entrywise sum. The result's support is the union of both supports.
AdjacencyMatrix operator+(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

// A = S S^T with zero cells left empty.
AdjacencyMatrix Project(const IncidenceMatrix& s);

// [X]_A: X restricted to the nonempty cells of `support`.
AdjacencyMatrix MaskOn(const AdjacencyMatrix& x,
                       const AdjacencyMatrix& support);

// [X]_{A-bar}: X restricted to the empty cells of `support`.
AdjacencyMatrix MaskOff(const AdjacencyMatrix& x,
                        const AdjacencyMatrix& support);

struct Decomposition {
  AdjacencyMatrix overlapping;  // A + [dA]_A
  AdjacencyMatrix novel;        // [dA]_{A-bar}
};

// Splits A + dA into the part living on A's support and the remainder.
Decomposition Decompose(const AdjacencyMatrix& a, const AdjacencyMatrix& delta);

// U diag(weights) U^T. Columns with zero weight contribute nothing.
AdjacencyMatrix WeightedOuter(const IncidenceMatrix& u,
                              std::span<const double> weights);

// A + [U diag(weights) U^T]_A, or the unmasked sum when restrict_to_a is
// false.
AdjacencyMatrix AddWeightedOuter(const AdjacencyMatrix& a,
                                 const IncidenceMatrix& u,
                                 std::span<const double> weights,
                                 bool restrict_to_a);

}  // namespace hlp

#endif  // HLP_HYPERMATRIX_HPP_
