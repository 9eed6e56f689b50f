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

// Reference hyperlink scorers. Each maps (training S, candidates U) to one
// score per candidate column.

#ifndef HLP_BASELINES_HPP_
#define HLP_BASELINES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hlp/hypermatrix.hpp"
#include "hlp/matching.hpp"

namespace hlp {

// Unweighted simple graph of the training network: i ~ j iff i != j and
// A(i, j) is nonempty. Sorted neighbor lists.
std::vector<std::vector<Index>> TrainingGraph(const IncidenceMatrix& s);

// Mean pairwise common-neighbor count over each candidate's vertex pairs.
// Candidates with fewer than two vertices score 0.
ScoreVector ScoreHcn(const IncidenceMatrix& s, const IncidenceMatrix& u);

struct KatzConfig {
  double beta = 0.01;
  std::size_t max_path_length = 5;

  void Validate() const;
};

inline const std::vector<double> kKatzBetaGrid = {0.001, 0.005, 0.01, 0.1,
                                                  0.5};

// Mean pairwise truncated Katz index sum_{l=1..L} beta^l * walks_l(i, j).
ScoreVector ScoreHkatz(const IncidenceMatrix& s, const IncidenceMatrix& u,
                       const KatzConfig& cfg);

struct ShcConfig {
  double xi = 0.5;
  // Degree assigned to isolated nodes of the transposed hypergraph.
  double isolated_degree = 1e-12;

  void Validate() const;
};

inline const std::vector<double> kShcXiGrid = {0.01, 0.1, 0.5, 0.99, 1.0};

// Spectral hypergraph classifier on the transposed system: the N^S + N^U
// columns become nodes, the M vertices become hyperedges, and
// f = (I - xi * Theta)^{-1} y with y = 1 on training columns, 0 on
// candidates, Theta = Dv^{-1/2} H De^{-1} H^T Dv^{-1/2}. Returns f on the
// candidates. Throws SingularSystemError when I - xi * Theta is singular.
ScoreVector ScoreShc(const IncidenceMatrix& s, const IncidenceMatrix& u,
                     const ShcConfig& cfg);

// I.i.d. uniform [0, 1) scores.
ScoreVector ScoreRandom(std::size_t num_candidates, std::uint64_t seed);

}  // namespace hlp

#endif  // HLP_BASELINES_HPP_
