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

// Matrix boosting: alternate completion and matching until successive score
// vectors stop getting closer, then average the early iterates.
//
//   A_k     = A + [U diag(lambda_{k-1}) U^T]_A
//   dAhat_k = complete(A_k)
//   lambda_k = match(U, dAhat_k, A)
//
// The loop stops at the first k >= 2 with
// |lambda_k - lambda_{k-1}| >= |lambda_{k-1} - lambda_{k-2}|, or at
// k = max_iterations. The output is the mean of lambda_1 .. lambda_{k-2}; when
// k <= 2 it is lambda_k itself.

#ifndef HLP_MATBOOST_HPP_
#define HLP_MATBOOST_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hlp/completion.hpp"
#include "hlp/hypermatrix.hpp"
#include "hlp/matching.hpp"

namespace hlp {

struct MatBoostConfig {
  std::size_t max_iterations = 10;
  CompletionConfig completion;
  MatchConfig matching;

  void Validate() const;
};

enum class StopReason { kCriterion, kIterationCap };

const char* ToString(StopReason reason);

struct IterationTrace {
  std::vector<ScoreVector> scores;  // lambda_1 .. lambda_k
  std::vector<double> drift;        // drift[i] = |lambda_{i+1} - lambda_i|
  StopReason stop_reason = StopReason::kIterationCap;
};

struct MatBoostResult {
  ScoreVector scores;
  IterationTrace trace;
};

// Euclidean norm of cur - prev (the Frobenius norm of the diagonal matrices).
double Drift(std::span<const double> prev, std::span<const double> cur);

// Mean of trace.scores[0 .. k-3], or the last iterate when k <= 2.
ScoreVector EnsembleAverage(const IterationTrace& trace);

// One completion-matching round: maps lambda_{k-1} to lambda_k. `iteration`
// is k, starting at 1.
using BoostStep =
    std::function<ScoreVector(std::size_t iteration, const ScoreVector& prev)>;

// The outer loop with the stopping rule and ensemble output, independent of
// what a round computes.
MatBoostResult RunFixedPoint(std::size_t num_candidates,
                             std::size_t max_iterations, const BoostStep& step);

// Throws DegenerateInputError when `s` has no columns or `u` is empty, and
// DimensionError when their vertex counts differ.
MatBoostResult RunMatBoost(const IncidenceMatrix& s, const IncidenceMatrix& u,
                           const MatBoostConfig& cfg);

}  // namespace hlp

#endif  // HLP_MATBOOST_HPP_
