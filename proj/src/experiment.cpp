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

#include "hlp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "hlp/error.hpp"

namespace hlp {
namespace {

struct Job {
  std::size_t missing_count;
  std::size_t trial;
};

void MeanStd(const std::vector<double>& xs, double& mean, double& stddev) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  // Sample standard deviation; 0 for a single trial.
  stddev = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1))
                         : 0.0;
}

}  // namespace

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMatBoost:
      return "matboost";
    case Algorithm::kShc:
      return "shc";
    case Algorithm::kHkatz:
      return "hkatz";
    case Algorithm::kHcn:
      return "hcn";
    case Algorithm::kRandom:
      return "random";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kMatBoost, Algorithm::kShc, Algorithm::kHkatz,
                      Algorithm::kHcn, Algorithm::kRandom}) {
    if (ToString(a) == name) return a;
  }
  throw InvalidInputError("unknown algorithm '" + std::string(name) +
                          "' (expected matboost, shc, hkatz, hcn or random)");
}

ScoreVector ScoreWith(const AlgorithmSpec& spec, const IncidenceMatrix& train,
                      const IncidenceMatrix& candidates, std::uint64_t seed,
                      double* selected) {
  switch (spec.kind) {
    case Algorithm::kMatBoost: {
      MatBoostConfig cfg = spec.matboost;
      cfg.completion.seed = DeriveSeed(seed, 11);
      return RunMatBoost(train, candidates, cfg).scores;
    }
    case Algorithm::kHcn:
      return ScoreHcn(train, candidates);
    case Algorithm::kRandom:
      return ScoreRandom(candidates.num_columns(), DeriveSeed(seed, 12));
    case Algorithm::kHkatz: {
      KatzConfig cfg = spec.katz;
      if (spec.cross_validate) {
        auto scorer = [&](const IncidenceMatrix& s, const IncidenceMatrix& u,
                          double beta) {
          KatzConfig c = spec.katz;
          c.beta = beta;
          return ScoreHkatz(s, u, c);
        };
        cfg.beta = CrossValidate(train, candidates, scorer, kKatzBetaGrid,
                                 DeriveSeed(seed, 13))
                       .best;
      }
      if (selected != nullptr) *selected = cfg.beta;
      return ScoreHkatz(train, candidates, cfg);
    }
    case Algorithm::kShc: {
      ShcConfig cfg = spec.shc;
      if (spec.cross_validate) {
        auto scorer = [&](const IncidenceMatrix& s, const IncidenceMatrix& u,
                          double xi) {
          ShcConfig c = spec.shc;
          c.xi = xi;
          return ScoreShc(s, u, c);
        };
        cfg.xi = CrossValidate(train, candidates, scorer, kShcXiGrid,
                               DeriveSeed(seed, 14))
                     .best;
      }
      if (selected != nullptr) *selected = cfg.xi;
      return ScoreShc(train, candidates, cfg);
    }
  }
  throw InvalidInputError("unhandled algorithm");
}

void ExperimentSpec::Validate(std::size_t num_hyperlinks) const {
  if (missing_counts.empty()) {
    throw InvalidInputError("at least one missing count is required");
  }
  for (std::size_t m : missing_counts) {
    if (m < 1 || m >= num_hyperlinks) {
      throw InvalidInputError("missing count " + std::to_string(m) +
                              " must lie in [1, " +
                              std::to_string(num_hyperlinks) + ")");
    }
  }
  if (trials < 1) throw InvalidInputError("trials must be >= 1");
  if (algorithms.empty()) throw InvalidInputError("no algorithm selected");
  if (threads < 1) throw InvalidInputError("threads must be >= 1");
  for (const auto& a : algorithms) {
    a.matboost.Validate();
    a.katz.Validate();
    a.shc.Validate();
  }
}

std::uint64_t TrialSeed(std::uint64_t base, std::size_t missing_count,
                        std::size_t trial) {
  return DeriveSeed(base, 0x5eed, missing_count, trial);
}

ExperimentResult RunExperiment(const IncidenceMatrix& full,
                               const IncidenceMatrix& neg_pool,
                               const ExperimentSpec& spec,
                               const RecordSink& sink) {
  spec.Validate(full.num_columns());

  std::vector<Job> jobs;
  for (std::size_t m : spec.missing_counts) {
    for (std::size_t t = 0; t < spec.trials; ++t) jobs.push_back({m, t});
  }
  const std::size_t num_algos = spec.algorithms.size();
  std::vector<TrialRecord> records(jobs.size() * num_algos);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::mutex sink_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const Job& job = jobs[j];
        const std::uint64_t seed = TrialSeed(spec.seed, job.missing_count,
                                             job.trial);
        const TrialSplit split =
            MakeSplit(full, neg_pool, job.missing_count, seed);
        for (std::size_t a = 0; a < num_algos; ++a) {
          const auto start = std::chrono::steady_clock::now();
          const ScoreVector scores = ScoreWith(
              spec.algorithms[a], split.train, split.candidates, seed);
          const std::chrono::duration<double> elapsed =
              std::chrono::steady_clock::now() - start;
          TrialRecord& r = records[j * num_algos + a];
          r.algorithm = std::string(ToString(spec.algorithms[a].kind));
          r.missing_count = job.missing_count;
          r.trial = job.trial;
          r.auc = Auc(scores, split.labels);
          r.recovered = RecoveredNumber(scores, split.labels);
          r.runtime_s = elapsed.count();
        }
        if (sink) {
          std::lock_guard lock(sink_mutex);
          for (std::size_t a = 0; a < num_algos; ++a) {
            sink(records[j * num_algos + a]);
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };

  const std::size_t workers = std::min(spec.threads, jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.records = std::move(records);
  result.summary = Summarize(result.records);
  return result;
}

std::vector<CellSummary> Summarize(const std::vector<TrialRecord>& records) {
  // Keyed by first appearance of the algorithm, then missing count.
  std::vector<std::string> algo_order;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const TrialRecord*>>
      cells;
  for (const auto& r : records) {
    auto it = std::find(algo_order.begin(), algo_order.end(), r.algorithm);
    const auto idx = static_cast<std::size_t>(it - algo_order.begin());
    if (it == algo_order.end()) algo_order.push_back(r.algorithm);
    cells[{idx, r.missing_count}].push_back(&r);
  }
  std::vector<CellSummary> summary;
  for (const auto& [key, rows] : cells) {
    std::vector<double> aucs, recovered;
    for (const auto* r : rows) {
      aucs.push_back(r->auc);
      recovered.push_back(static_cast<double>(r->recovered));
    }
    CellSummary cell;
    cell.algorithm = algo_order[key.first];
    cell.missing_count = key.second;
    cell.trials = rows.size();
    MeanStd(aucs, cell.auc_mean, cell.auc_std);
    MeanStd(recovered, cell.recovered_mean, cell.recovered_std);
    summary.push_back(cell);
  }
  return summary;
}

}  // namespace hlp
