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

#include "hlp/matboost.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "hlp/error.hpp"

namespace hlp {
namespace {

// splitmix64 finalizer; gives each round its own completion seed.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t round) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (round + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void MatBoostConfig::Validate() const {
  if (max_iterations < 1) throw InvalidInputError("max_iterations must be >= 1");
  completion.Validate();
  matching.Validate();
}

const char* ToString(StopReason reason) {
  switch (reason) {
    case StopReason::kCriterion:
      return "criterion";
    case StopReason::kIterationCap:
      return "iteration_cap";
  }
  return "unknown";
}

double Drift(std::span<const double> prev, std::span<const double> cur) {
  if (prev.size() != cur.size()) {
    throw DimensionError("Drift: lengths " + std::to_string(prev.size()) +
                         " and " + std::to_string(cur.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    const double d = cur[i] - prev[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

ScoreVector EnsembleAverage(const IterationTrace& trace) {
  const std::size_t k = trace.scores.size();
  if (k == 0) throw DegenerateInputError("EnsembleAverage: empty trace");
  if (k <= 2) return trace.scores.back();
  const std::size_t used = k - 2;
  ScoreVector mean(trace.scores.front().size(), 0.0);
  for (std::size_t i = 0; i < used; ++i) {
    for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += trace.scores[i][c];
  }
  for (double& v : mean) v /= static_cast<double>(used);
  return mean;
}

MatBoostResult RunFixedPoint(std::size_t num_candidates,
                             std::size_t max_iterations,
                             const BoostStep& step) {
  if (max_iterations < 1) throw InvalidInputError("max_iterations must be >= 1");
  MatBoostResult result;
  IterationTrace& trace = result.trace;
  ScoreVector prev(num_candidates, 0.0);  // lambda_0
  for (std::size_t k = 1;; ++k) {
    ScoreVector cur = step(k, prev);
    if (cur.size() != num_candidates) {
      throw DimensionError("boost round returned " + std::to_string(cur.size()) +
                           " scores for " + std::to_string(num_candidates) +
                           " candidates");
    }
    trace.drift.push_back(Drift(prev, cur));
    trace.scores.push_back(cur);
    if (k >= 2 && trace.drift[k - 1] >= trace.drift[k - 2]) {
      trace.stop_reason = StopReason::kCriterion;
      break;
    }
    if (k == max_iterations) {
      trace.stop_reason = StopReason::kIterationCap;
      break;
    }
    prev = std::move(cur);
  }
  result.scores = EnsembleAverage(trace);
  return result;
}

MatBoostResult RunMatBoost(const IncidenceMatrix& s, const IncidenceMatrix& u,
                           const MatBoostConfig& cfg) {
  cfg.Validate();
  if (s.num_columns() == 0) {
    throw DegenerateInputError("MATBoost: training incidence matrix is empty");
  }
  if (u.num_columns() == 0) {
    throw DegenerateInputError("MATBoost: candidate pool is empty");
  }
  if (s.num_vertices() != u.num_vertices()) {
    throw DimensionError("MATBoost: training has " +
                         std::to_string(s.num_vertices()) +
                         " vertices, candidates have " +
                         std::to_string(u.num_vertices()));
  }

  const AdjacencyMatrix a = Project(s);
  auto round = [&](std::size_t k, const ScoreVector& prev) {
    const AdjacencyMatrix a_k = AddWeightedOuter(a, u, prev, true);
    CompletionConfig completion = cfg.completion;
    completion.seed = MixSeed(cfg.completion.seed, k);
    const FactorModel model = Train(a_k, completion);
    const AdjacencyMatrix predicted = PredictEmptyWithin(model, a_k, u);
    return SolveLasso(u, predicted, a, cfg.matching);
  };
  return RunFixedPoint(u.num_columns(), cfg.max_iterations, round);
}

}  // namespace hlp
