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

#include "hlp/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "hlp/error.hpp"

namespace hlp {
namespace {

struct CellOwner {
  std::uint64_t cell;
  std::size_t candidate;
};

}  // namespace

void MatchConfig::Validate() const {
  if (!(l1_penalty >= 0.0) || !std::isfinite(l1_penalty)) {
    throw InvalidInputError("l1_penalty must be finite and >= 0");
  }
  if (max_steps < 1) throw InvalidInputError("max_steps must be >= 1");
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw InvalidInputError("step_size must be finite and > 0");
  }
  if (!(tolerance >= 0.0)) throw InvalidInputError("tolerance must be >= 0");
}

MatchingProblem::MatchingProblem(const IncidenceMatrix& u,
                                 const AdjacencyMatrix& a,
                                 const AdjacencyMatrix& target) {
  if (u.num_vertices() != a.dim() || target.dim() != a.dim()) {
    throw DimensionError("matching: candidate vertex count " +
                         std::to_string(u.num_vertices()) +
                         ", adjacency dimension " + std::to_string(a.dim()) +
                         ", target dimension " + std::to_string(target.dim()));
  }
  const std::uint64_t dim = a.dim();
  const std::size_t n = u.num_columns();

  // Masked clique cells of every candidate, grouped by cell.
  std::vector<CellOwner> owners;
  for (std::size_t c = 0; c < n; ++c) {
    auto col = u.column(c);
    for (std::size_t p = 0; p < col.size(); ++p) {
      for (std::size_t q = p + 1; q < col.size(); ++q) {
        if (a.Has(col[p], col[q])) continue;
        owners.push_back({col[p] * dim + col[q], c});
      }
    }
  }
  std::sort(owners.begin(), owners.end(), [](const auto& x, const auto& y) {
    return x.cell != y.cell ? x.cell < y.cell : x.candidate < y.candidate;
  });

  gram_.assign(n * n, 0.0);
  linear_.assign(n, 0.0);
  for (std::size_t lo = 0; lo < owners.size();) {
    std::size_t hi = lo;
    while (hi < owners.size() && owners[hi].cell == owners[lo].cell) ++hi;
    const Index row = owners[lo].cell / dim;
    const Index col = owners[lo].cell % dim;
    const double t = target.At(row, col);
    for (std::size_t x = lo; x < hi; ++x) {
      linear_[owners[x].candidate] += t;
      for (std::size_t y = lo; y < hi; ++y) {
        gram_[owners[x].candidate * n + owners[y].candidate] += 1.0;
      }
    }
    lo = hi;
  }

  for (const auto& e : target.entries()) {
    if (!std::isfinite(e.value)) {
      throw InvalidInputError("matching: target holds a non-finite value");
    }
    if (e.row != e.col) constant_ += e.value * e.value;
  }
}

double MatchingProblem::Evaluate(std::span<const double> lambda,
                                 double l1_penalty,
                                 std::vector<double>* gradient) const {
  const std::size_t n = linear_.size();
  if (lambda.size() != n) {
    throw DimensionError("matching: score vector length " +
                         std::to_string(lambda.size()) + " for " +
                         std::to_string(n) + " candidates");
  }
  if (gradient != nullptr) gradient->assign(n, 0.0);
  double quad = 0.0;
  double lin = 0.0;
  double l1 = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double row = 0.0;
    const double* g = gram_.data() + c * n;
    for (std::size_t d = 0; d < n; ++d) row += g[d] * lambda[d];
    quad += lambda[c] * row;
    lin += linear_[c] * lambda[c];
    l1 += std::abs(lambda[c]);
    if (gradient != nullptr) (*gradient)[c] = 4.0 * (row - linear_[c]);
  }
  return 2.0 * (quad - 2.0 * lin + constant_) + l1_penalty * l1;
}

double MatchingProblem::Objective(std::span<const double> lambda,
                                  double l1_penalty) const {
  return Evaluate(lambda, l1_penalty, nullptr);
}

std::vector<double> MatchingProblem::QuadraticGradient(
    std::span<const double> lambda) const {
  std::vector<double> g;
  Evaluate(lambda, 0.0, &g);
  return g;
}

double MatchingProblem::LipschitzBound() const {
  // 4 * lambda_max(G) <= 4 * max row sum (G is entrywise non-negative).
  const std::size_t n = linear_.size();
  double bound = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double sum = 0.0;
    for (std::size_t d = 0; d < n; ++d) sum += gram_[c * n + d];
    bound = std::max(bound, sum);
  }
  return 4.0 * bound;
}

LassoResult SolveLassoDetailed(const IncidenceMatrix& u,
                               const AdjacencyMatrix& target,
                               const AdjacencyMatrix& a,
                               const MatchConfig& cfg) {
  cfg.Validate();
  const MatchingProblem problem(u, a, target);
  const std::size_t n = problem.num_candidates();
  const double alpha = cfg.l1_penalty;
  const double lipschitz = problem.LipschitzBound();
  const double step = lipschitz > 0.0 ? cfg.step_size / lipschitz
                                      : cfg.step_size;

  LassoResult result;
  std::vector<double> lambda(n, 0.0);
  std::vector<double> g;
  double current = problem.Evaluate(lambda, alpha, &g);
  result.scores = lambda;
  result.objective = current;
  result.best_objective.push_back(current);

  for (std::size_t s = 0; s < cfg.max_steps; ++s) {
    for (std::size_t c = 0; c < n; ++c) {
      // On the box, |lambda| = lambda, so alpha is the L1 subgradient.
      lambda[c] = std::clamp(lambda[c] - step * (g[c] + alpha), 0.0, 1.0);
    }
    const double next = problem.Evaluate(lambda, alpha, &g);
    ++result.steps;
    if (next < result.objective) {
      result.objective = next;
      result.scores = lambda;
    }
    result.best_objective.push_back(result.objective);
    const bool converged = std::abs(next - current) < cfg.tolerance;
    current = next;
    if (converged) break;
  }
  return result;
}

IlsqSolution SolveIlsqOracle(const IncidenceMatrix& u,
                             const AdjacencyMatrix& target,
                             const AdjacencyMatrix& a) {
  const std::size_t n = u.num_columns();
  if (n > kMaxOracleCandidates) {
    throw ScaleLimitError("ILSQ oracle enumerates 2^N subsets; N = " +
                          std::to_string(n) + " exceeds the limit of " +
                          std::to_string(kMaxOracleCandidates));
  }
  const MatchingProblem problem(u, a, target);
  const double inf = std::numeric_limits<double>::infinity();

  IlsqSolution best;
  best.indicators.assign(n, 0.0);
  best.residual = inf;
  best.runner_up_residual = inf;
  std::vector<double> lambda(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  // Counting upward with candidate 0 as the top bit visits vectors in
  // lexicographic order, so a strict improvement keeps the smallest tie.
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t c = 0; c < n; ++c) {
      lambda[c] = (mask >> (n - 1 - c)) & 1U ? 1.0 : 0.0;
    }
    const double r = problem.Objective(lambda, 0.0);
    if (r < best.residual) {
      best.runner_up_residual = best.residual;
      best.residual = r;
      best.indicators = lambda;
    } else if (r < best.runner_up_residual) {
      best.runner_up_residual = r;
    }
  }
  return best;
}

std::vector<std::size_t> RankCandidates(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x,
                                                   std::size_t y) {
    return scores[x] > scores[y];
  });
  return order;
}

}  // namespace hlp
