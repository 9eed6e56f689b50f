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

#include "hlp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "hlp/error.hpp"

namespace hlp {
namespace {

std::uint64_t SplitMix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void CheckLabels(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw DimensionError(std::to_string(scores.size()) + " scores for " +
                         std::to_string(labels.size()) + " labels");
  }
}

// Preferential sampling of hyperlinks; degrees persist across calls.
class HyperlinkSampler {
 public:
  HyperlinkSampler(const SyntheticConfig& cfg, std::uint64_t seed)
      : cfg_(cfg), rng_(seed), degree_(cfg.num_vertices, 0) {}

  std::vector<Index> Next() {
    std::uniform_int_distribution<std::size_t> size_dist(cfg_.min_cardinality,
                                                         cfg_.max_cardinality);
    const std::size_t size = size_dist(rng_);
    std::vector<double> weight(cfg_.num_vertices);
    for (Index v = 0; v < weight.size(); ++v) {
      weight[v] = std::pow(static_cast<double>(degree_[v]) + 1.0,
                           cfg_.overlap_bias);
    }
    std::vector<Index> picked;
    for (std::size_t n = 0; n < size; ++n) {
      std::discrete_distribution<Index> pick(weight.begin(), weight.end());
      const Index v = pick(rng_);
      picked.push_back(v);
      weight[v] = 0.0;
    }
    for (Index v : picked) ++degree_[v];
    std::sort(picked.begin(), picked.end());
    return picked;
  }

 private:
  SyntheticConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> degree_;
};

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c) {
  std::uint64_t z = SplitMix(base);
  z = SplitMix(z ^ a);
  z = SplitMix(z ^ b);
  return SplitMix(z ^ c);
}

TrialSplit MakeSplit(const IncidenceMatrix& full,
                     const IncidenceMatrix& neg_pool,
                     std::size_t missing_count, std::uint64_t seed) {
  if (missing_count >= full.num_columns()) {
    throw InvalidInputError("missing_count " + std::to_string(missing_count) +
                            " must be smaller than the " +
                            std::to_string(full.num_columns()) +
                            " available hyperlinks");
  }
  if (neg_pool.num_columns() > 0 &&
      neg_pool.num_vertices() != full.num_vertices()) {
    throw DimensionError("negative pool and network disagree on vertex count");
  }
  std::mt19937_64 rng(seed);
  std::vector<Index> order(full.num_columns());
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Index> deleted(order.begin(), order.begin() + missing_count);
  std::vector<Index> kept(order.begin() + missing_count, order.end());
  std::sort(kept.begin(), kept.end());

  // Candidate slots: positives first, then negatives, then shuffled.
  std::vector<std::pair<const std::vector<Index>*, int>> slots;
  for (Index c : deleted) slots.push_back({&full.columns()[c], 1});
  for (const auto& col : neg_pool.columns()) slots.push_back({&col, 0});
  std::shuffle(slots.begin(), slots.end(), rng);

  std::vector<std::vector<Index>> cand_cols;
  TrialSplit split;
  for (const auto& [col, label] : slots) {
    cand_cols.push_back(*col);
    split.labels.push_back(label);
  }
  split.train = full.Select(kept);
  split.candidates = IncidenceMatrix(full.num_vertices(), std::move(cand_cols));
  return split;
}

double Auc(std::span<const double> scores, std::span<const int> labels) {
  CheckLabels(scores, labels);
  const std::size_t n = scores.size();
  const auto positives = static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](int l) { return l != 0; }));
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) {
    throw InvalidInputError("AUC needs at least one positive and one negative");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return scores[x] < scores[y]; });

  // Sum of 1-based mid-ranks of the positives.
  double rank_sum = 0.0;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi < n && scores[order[hi]] == scores[order[lo]]) ++hi;
    const double mid_rank = (static_cast<double>(lo + hi) + 1.0) / 2.0;
    for (std::size_t x = lo; x < hi; ++x) {
      if (labels[order[x]] != 0) rank_sum += mid_rank;
    }
    lo = hi;
  }
  const double p = static_cast<double>(positives);
  const double u = rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(negatives));
}

std::size_t RecoveredNumber(std::span<const double> scores,
                            std::span<const int> labels) {
  CheckLabels(scores, labels);
  const auto n = static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](int l) { return l != 0; }));
  if (n == 0) throw InvalidInputError("recovered number needs a positive label");
  const auto ranking = RankCandidates(scores);
  std::size_t hits = 0;
  for (std::size_t r = 0; r < n; ++r) hits += labels[ranking[r]] != 0 ? 1 : 0;
  return hits;
}

CrossValidationResult CrossValidate(const IncidenceMatrix& s,
                                    const IncidenceMatrix& negatives,
                                    const ParamScorer& scorer,
                                    std::span<const double> grid,
                                    std::uint64_t seed) {
  const std::size_t n = s.num_columns();
  if (n < kCrossValidationFolds) {
    throw InvalidInputError("cross-validation needs at least " +
                            std::to_string(kCrossValidationFolds) +
                            " hyperlinks, got " + std::to_string(n));
  }
  if (grid.empty()) throw InvalidInputError("cross-validation grid is empty");
  if (negatives.num_columns() == 0) {
    throw InvalidInputError("cross-validation needs negative hyperlinks");
  }

  std::mt19937_64 rng(seed);
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);

  // Folds and their negative subsamples are fixed before the grid loop so
  // every grid value sees the same data.
  struct Fold {
    IncidenceMatrix train;
    IncidenceMatrix candidates;
    std::vector<int> labels;
  };
  std::vector<Fold> folds;
  for (std::size_t f = 0; f < kCrossValidationFolds; ++f) {
    std::vector<Index> held, kept;
    for (std::size_t r = 0; r < n; ++r) {
      (r % kCrossValidationFolds == f ? held : kept).push_back(order[r]);
    }
    std::sort(kept.begin(), kept.end());
    std::vector<Index> neg(negatives.num_columns());
    std::iota(neg.begin(), neg.end(), Index{0});
    std::shuffle(neg.begin(), neg.end(), rng);
    neg.resize(std::min(neg.size(), held.size()));

    Fold fold;
    fold.train = s.Select(kept);
    fold.candidates = s.Select(held).Concat(negatives.Select(neg));
    fold.labels.assign(held.size(), 1);
    fold.labels.resize(held.size() + neg.size(), 0);
    folds.push_back(std::move(fold));
  }

  CrossValidationResult result;
  result.mean_auc.assign(grid.size(), std::numeric_limits<double>::quiet_NaN());
  bool any = false;
  double best_auc = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double total = 0.0;
    try {
      for (const auto& fold : folds) {
        total += Auc(scorer(fold.train, fold.candidates, grid[g]), fold.labels);
      }
    } catch (const Error&) {
      continue;
    }
    const double mean = total / static_cast<double>(folds.size());
    result.mean_auc[g] = mean;
    if (!any || mean > best_auc ||
        (mean == best_auc && grid[g] < result.best)) {
      any = true;
      best_auc = mean;
      result.best = grid[g];
    }
  }
  if (!any) {
    throw DegenerateInputError("cross-validation: every grid value failed");
  }
  return result;
}

void SyntheticConfig::Validate() const {
  if (min_cardinality < 2) {
    throw InvalidInputError("min_cardinality must be >= 2");
  }
  if (min_cardinality > max_cardinality) {
    throw InvalidInputError("min_cardinality exceeds max_cardinality");
  }
  if (num_vertices < max_cardinality) {
    throw InvalidInputError("num_vertices " + std::to_string(num_vertices) +
                            " is smaller than max_cardinality " +
                            std::to_string(max_cardinality));
  }
  if (!std::isfinite(overlap_bias) || overlap_bias < 0.0) {
    throw InvalidInputError("overlap_bias must be finite and >= 0");
  }
}

IncidenceMatrix GenerateSynthetic(const SyntheticConfig& cfg) {
  cfg.Validate();
  HyperlinkSampler sampler(cfg, DeriveSeed(cfg.seed, 1));
  std::vector<std::vector<Index>> cols;
  cols.reserve(cfg.num_hyperlinks);
  for (std::size_t n = 0; n < cfg.num_hyperlinks; ++n) {
    cols.push_back(sampler.Next());
  }
  return IncidenceMatrix(cfg.num_vertices, std::move(cols));
}

IncidenceMatrix GenerateNegativePool(const IncidenceMatrix& truth,
                                     std::size_t count,
                                     const SyntheticConfig& cfg) {
  cfg.Validate();
  if (truth.num_vertices() != cfg.num_vertices) {
    throw DimensionError("negative pool: vertex count differs from truth");
  }
  HyperlinkSampler sampler(cfg, DeriveSeed(cfg.seed, 2));
  std::vector<std::vector<Index>> cols;
  const std::size_t max_attempts = 1000 * (count + 1);
  for (std::size_t attempt = 0; cols.size() < count; ++attempt) {
    if (attempt == max_attempts) {
      throw DegenerateInputError(
          "negative pool: too few distinct hyperlinks outside the network");
    }
    auto col = sampler.Next();
    if (truth.Contains(col) ||
        std::find(cols.begin(), cols.end(), col) != cols.end()) {
      continue;
    }
    cols.push_back(std::move(col));
  }
  return IncidenceMatrix(cfg.num_vertices, std::move(cols));
}

}  // namespace hlp
