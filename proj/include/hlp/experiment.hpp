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

#ifndef HLP_EXPERIMENT_HPP_
#define HLP_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hlp/baselines.hpp"
#include "hlp/eval.hpp"
#include "hlp/hypermatrix.hpp"
#include "hlp/matboost.hpp"

namespace hlp {

enum class Algorithm { kMatBoost, kShc, kHkatz, kHcn, kRandom };

std::string_view ToString(Algorithm algorithm);

// Throws InvalidInputError on an unknown name.
Algorithm ParseAlgorithm(std::string_view name);

struct AlgorithmSpec {
  Algorithm kind = Algorithm::kMatBoost;
  MatBoostConfig matboost;
  KatzConfig katz;
  ShcConfig shc;
  // Pick beta (HKatz) or xi (SHC) by cross-validation on the training split
  // instead of using the configured value.
  bool cross_validate = false;
};

// Scores `candidates` against `train`. `seed` drives every random choice.
// Returns the chosen hyperparameter in `selected` when cross-validating.
ScoreVector ScoreWith(const AlgorithmSpec& spec, const IncidenceMatrix& train,
                      const IncidenceMatrix& candidates, std::uint64_t seed,
                      double* selected = nullptr);

struct ExperimentSpec {
  std::string dataset;
  std::vector<std::size_t> missing_counts;
  std::size_t trials = 12;
  std::uint64_t seed = 0;
  std::vector<AlgorithmSpec> algorithms;
  std::size_t threads = 1;

  // Throws InvalidInputError when this setup cannot run on a network with
  // `num_hyperlinks` columns.
  void Validate(std::size_t num_hyperlinks) const;
};

struct TrialRecord {
  std::string algorithm;
  std::size_t missing_count = 0;
  std::size_t trial = 0;
  double auc = 0.0;
  std::size_t recovered = 0;
  double runtime_s = 0.0;
};

struct CellSummary {
  std::string algorithm;
  std::size_t missing_count = 0;
  std::size_t trials = 0;
  double auc_mean = 0.0;
  double auc_std = 0.0;
  double recovered_mean = 0.0;
  double recovered_std = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // ordered by missing_count, trial, algo
  std::vector<CellSummary> summary;  // ordered by algorithm, missing_count
};

// Seed of the deletion split for one (missing_count, trial) cell. Every
// algorithm sees the same split.
std::uint64_t TrialSeed(std::uint64_t base, std::size_t missing_count,
                        std::size_t trial);

using RecordSink = std::function<void(const TrialRecord&)>;

// Runs every algorithm on every split. Trials run on `spec.threads` workers;
// records are collected in a fixed order regardless of scheduling. `sink`,
// when set, sees each record as its trial finishes, one call at a time.
ExperimentResult RunExperiment(const IncidenceMatrix& full,
                               const IncidenceMatrix& neg_pool,
                               const ExperimentSpec& spec,
                               const RecordSink& sink = nullptr);

std::vector<CellSummary> Summarize(const std::vector<TrialRecord>& records);

}  // namespace hlp

#endif  // HLP_EXPERIMENT_HPP_
