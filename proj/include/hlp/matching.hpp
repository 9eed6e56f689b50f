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

// Matching step: choose candidate hyperlinks whose clique outer products,
// masked to the empty cells of the training adjacency A, reproduce a target
// matrix T:
//
//   minimize  || [U diag(lambda) U^T]_{A-bar} - T ||_F^2 + alpha * sum lambda
//   s.t.      0 <= lambda <= 1
//
// The Frobenius norm runs over the full symmetric matrix (each off-diagonal
// cell counted twice); the diagonal is excluded. With P_c the set of
// off-diagonal cells of candidate c that are empty in A, the quadratic term is
//
//   2 * (lambda' G lambda - 2 b' lambda + const),
//   G(c, d) = |P_c intersect P_d|,   b(c) = sum_{p in P_c} T(p).

#ifndef HLP_MATCHING_HPP_
#define HLP_MATCHING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hlp/hypermatrix.hpp"

namespace hlp {

// Per-candidate scores, the diagonal of Lambda.
using ScoreVector = std::vector<double>;

struct MatchConfig {
  double l1_penalty = 0.1;
  std::size_t max_steps = 500;
  // Fraction of 1/L, L the Lipschitz bound of the quadratic's gradient.
  double step_size = 1.0;
  // Stop when one step changes the objective by less than this.
  double tolerance = 1e-6;

  void Validate() const;
};

class MatchingProblem {
 public:
  // Throws DimensionError on mismatched vertex counts and InvalidInputError
  // when `target` holds a non-finite value.
  MatchingProblem(const IncidenceMatrix& u, const AdjacencyMatrix& a,
                  const AdjacencyMatrix& target);

  std::size_t num_candidates() const { return linear_.size(); }

  // Full objective including the L1 term.
  double Objective(std::span<const double> lambda, double l1_penalty) const;

  // Objective, and the quadratic part's gradient when `gradient` is set.
  double Evaluate(std::span<const double> lambda, double l1_penalty,
                  std::vector<double>* gradient) const;

  // Gradient of the quadratic part only.
  std::vector<double> QuadraticGradient(std::span<const double> lambda) const;

  // Upper bound on the Lipschitz constant of QuadraticGradient.
  double LipschitzBound() const;

  double gram(std::size_t c, std::size_t d) const {
    return gram_[c * linear_.size() + d];
  }
  double linear(std::size_t c) const { return linear_[c]; }

 private:
  std::vector<double> gram_;    // N x N, row-major
  std::vector<double> linear_;  // b
  double constant_ = 0.0;       // sum of T(p)^2 over off-diagonal cells
};

struct LassoResult {
  ScoreVector scores;
  double objective = 0.0;
  // Best objective seen after each step, starting with lambda = 0.
  std::vector<double> best_objective;
  std::size_t steps = 0;
};

// Projected (sub)gradient descent from lambda = 0 with best-iterate
// tracking. Every iterate is clipped to [0, 1].
LassoResult SolveLassoDetailed(const IncidenceMatrix& u,
                               const AdjacencyMatrix& target,
                               const AdjacencyMatrix& a,
                               const MatchConfig& cfg);

inline ScoreVector SolveLasso(const IncidenceMatrix& u,
                              const AdjacencyMatrix& target,
                              const AdjacencyMatrix& a,
                              const MatchConfig& cfg) {
  return SolveLassoDetailed(u, target, a, cfg).scores;
}

inline constexpr std::size_t kMaxOracleCandidates = 20;

struct IlsqSolution {
  ScoreVector indicators;  // entries in {0, 1}
  double residual = 0.0;   // squared Frobenius residual at `indicators`
  // Smallest residual over every other binary vector; +inf when N = 0.
  double runner_up_residual = 0.0;
};

// Exhaustive search over {0,1}^N. Ties go to the lexicographically smallest
// vector (candidate 0 most significant). Throws ScaleLimitError when
// N > kMaxOracleCandidates.
IlsqSolution SolveIlsqOracle(const IncidenceMatrix& u,
                             const AdjacencyMatrix& target,
                             const AdjacencyMatrix& a);

// Candidate indices by descending score; equal scores keep ascending index.
std::vector<std::size_t> RankCandidates(std::span<const double> scores);

}  // namespace hlp

#endif  // HLP_MATCHING_HPP_
