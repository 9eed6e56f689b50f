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

// Missing-hyperlink recovery protocol: deletion splits, ranking metrics,
// hyperparameter cross-validation and synthetic hypergraphs.

#ifndef HLP_EVAL_HPP_
#define HLP_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hlp/hypermatrix.hpp"
#include "hlp/matching.hpp"

namespace hlp {

// Deterministic per-purpose seed derivation (splitmix64 over the parts).
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                         std::uint64_t b = 0, std::uint64_t c = 0);

struct TrialSplit {
  IncidenceMatrix train;
  IncidenceMatrix candidates;
  std::vector<int> labels;  // 1 for a deleted hyperlink, 0 for a negative
};

// Deletes `missing_count` columns of `full` uniformly at random; candidates
// are the deleted columns plus all of `neg_pool`, shuffled. Throws
// InvalidInputError when missing_count >= full.num_columns().
TrialSplit MakeSplit(const IncidenceMatrix& full,
                     const IncidenceMatrix& neg_pool,
                     std::size_t missing_count, std::uint64_t seed);

// Mann-Whitney AUC with ties counted as one half. Throws InvalidInputError
// unless both classes are present.
double Auc(std::span<const double> scores, std::span<const int> labels);

// Positives among the top-n ranked candidates, n = number of positives.
std::size_t RecoveredNumber(std::span<const double> scores,
                            std::span<const int> labels);

using ParamScorer = std::function<ScoreVector(
    const IncidenceMatrix& train, const IncidenceMatrix& candidates,
    double param)>;

inline constexpr std::size_t kCrossValidationFolds = 5;

struct CrossValidationResult {
  double best = 0.0;
  // Mean held-out AUC per grid value; NaN where the scorer failed.
  std::vector<double> mean_auc;
};

// Five-fold cross-validation over the columns of `s`. Each held-out fold is
// scored against an equally sized negative subsample of `negatives`. Ties
// go to the smallest grid value; grid values whose scorer throws are
// skipped.
CrossValidationResult CrossValidate(const IncidenceMatrix& s,
                                    const IncidenceMatrix& negatives,
                                    const ParamScorer& scorer,
                                    std::span<const double> grid,
                                    std::uint64_t seed);

struct SyntheticConfig {
  std::size_t num_vertices = 50;
  std::size_t num_hyperlinks = 90;
  std::size_t min_cardinality = 2;
  std::size_t max_cardinality = 5;
  // Vertex weight is (degree + 1)^overlap_bias; 0 samples uniformly.
  double overlap_bias = 1.0;
  std::uint64_t seed = 0;

  void Validate() const;
};

IncidenceMatrix GenerateSynthetic(const SyntheticConfig& cfg);

// `count` columns from the same generator on its own seed stream, rejecting
// any column equal to a column of `truth` or an earlier pool column.
IncidenceMatrix GenerateNegativePool(const IncidenceMatrix& truth,
                                     std::size_t count,
                                     const SyntheticConfig& cfg);

}  // namespace hlp

#endif  // HLP_EVAL_HPP_
