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

#include "hlp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hlp/error.hpp"

namespace hlp {
namespace {

void CheckModelDim(const FactorModel& model, const AdjacencyMatrix& a) {
  if (model.num_vertices() != a.dim()) {
    throw DimensionError("factor model has " +
                         std::to_string(model.num_vertices()) +
                         " vertices, adjacency matrix has " +
                         std::to_string(a.dim()));
  }
}

double SquaredNorm(std::span<const double> v) {
  return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

}  // namespace

void CompletionConfig::Validate() const {
  if (latent_dim < 1) throw InvalidInputError("latent_dim must be >= 1");
  if (!(reg >= 0.0) || !std::isfinite(reg)) {
    throw InvalidInputError("reg must be finite and >= 0");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidInputError("learning_rate must be finite and > 0");
  }
  if (epochs < 1) throw InvalidInputError("epochs must be >= 1");
}

FactorModel FactorModel::Zero(Index num_vertices, std::size_t latent_dim) {
  FactorModel m;
  m.bias.assign(num_vertices, 0.0);
  m.factors.assign(num_vertices * latent_dim, 0.0);
  m.latent_dim = latent_dim;
  return m;
}

double FactorModel::Predict(Index i, Index j) const {
  auto vi = factor(i);
  auto vj = factor(j);
  return global_bias + bias[i] + bias[j] +
         std::inner_product(vi.begin(), vi.end(), vj.begin(), 0.0);
}

std::vector<TrainingPair> TrainingPairs(const AdjacencyMatrix& a) {
  std::vector<TrainingPair> pairs;
  for (const auto& e : a.entries()) {
    if (e.row != e.col && e.value > 0.0) pairs.push_back({e.row, e.col, e.value});
  }
  return pairs;
}

double CompletionObjective(const FactorModel& model,
                           std::span<const TrainingPair> pairs, double reg) {
  double loss = 0.0;
  for (const auto& p : pairs) {
    const double r = p.target - model.Predict(p.i, p.j);
    loss += r * r;
  }
  const double norm = model.global_bias * model.global_bias +
                      SquaredNorm(model.bias) + SquaredNorm(model.factors);
  return loss + reg * norm;
}

FactorModel CompletionGradient(const FactorModel& model,
                               std::span<const TrainingPair> pairs,
                               double reg) {
  FactorModel g = FactorModel::Zero(model.num_vertices(), model.latent_dim);
  for (const auto& p : pairs) {
    const double d = -2.0 * (p.target - model.Predict(p.i, p.j));
    g.global_bias += d;
    g.bias[p.i] += d;
    g.bias[p.j] += d;
    auto vi = model.factor(p.i);
    auto vj = model.factor(p.j);
    auto gi = g.factor(p.i);
    auto gj = g.factor(p.j);
    for (std::size_t f = 0; f < model.latent_dim; ++f) {
      gi[f] += d * vj[f];
      gj[f] += d * vi[f];
    }
  }
  g.global_bias += 2.0 * reg * model.global_bias;
  for (Index i = 0; i < g.bias.size(); ++i) g.bias[i] += 2.0 * reg * model.bias[i];
  for (std::size_t n = 0; n < g.factors.size(); ++n) {
    g.factors[n] += 2.0 * reg * model.factors[n];
  }
  return g;
}

TrainResult TrainWithHistory(const AdjacencyMatrix& a,
                             const CompletionConfig& cfg) {
  cfg.Validate();
  auto pairs = TrainingPairs(a);
  if (pairs.empty()) {
    throw DegenerateInputError(
        "completion: adjacency matrix has no nonempty off-diagonal cell");
  }

  std::mt19937_64 rng(cfg.seed);
  TrainResult result;
  FactorModel& m = result.model;
  m = FactorModel::Zero(a.dim(), cfg.latent_dim);
  std::uniform_real_distribution<double> init(-0.01, 0.01);
  for (double& v : m.factors) v = init(rng);

  const double lr = cfg.learning_rate;
  const double reg = cfg.reg;
  std::vector<double> old_vi(cfg.latent_dim);
  result.epoch_objective.reserve(cfg.epochs);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const auto& p : pairs) {
      // Per-pair step on (target - y)^2 + reg * |touched params|^2.
      const double g = -2.0 * (p.target - m.Predict(p.i, p.j));
      m.global_bias -= lr * (g + 2.0 * reg * m.global_bias);
      m.bias[p.i] -= lr * (g + 2.0 * reg * m.bias[p.i]);
      m.bias[p.j] -= lr * (g + 2.0 * reg * m.bias[p.j]);
      auto vi = m.factor(p.i);
      auto vj = m.factor(p.j);
      std::copy(vi.begin(), vi.end(), old_vi.begin());
      for (std::size_t f = 0; f < cfg.latent_dim; ++f) {
        vi[f] -= lr * (g * vj[f] + 2.0 * reg * vi[f]);
        vj[f] -= lr * (g * old_vi[f] + 2.0 * reg * vj[f]);
      }
    }
    result.epoch_objective.push_back(CompletionObjective(m, pairs, reg));
  }
  return result;
}

AdjacencyMatrix PredictEmpty(const FactorModel& model,
                             const AdjacencyMatrix& a) {
  CheckModelDim(model, a);
  std::vector<AdjacencyEntry> cells;
  auto stored = a.entries();
  auto it = stored.begin();
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = i + 1; j < a.dim(); ++j) {
      while (it != stored.end() &&
             (it->row < i || (it->row == i && it->col < j))) {
        ++it;
      }
      if (it != stored.end() && it->row == i && it->col == j) continue;
      cells.push_back({i, j, model.Predict(i, j)});
    }
  }
  return AdjacencyMatrix::FromEntries(a.dim(), std::move(cells));
}

AdjacencyMatrix PredictEmptyWithin(const FactorModel& model,
                                   const AdjacencyMatrix& a,
                                   const IncidenceMatrix& cliques) {
  CheckModelDim(model, a);
  if (cliques.num_vertices() != a.dim()) {
    throw DimensionError("PredictEmptyWithin: candidate vertex count differs");
  }
  std::vector<AdjacencyEntry> cells;
  for (const auto& col : cliques.columns()) {
    for (std::size_t p = 0; p < col.size(); ++p) {
      for (std::size_t q = p + 1; q < col.size(); ++q) {
        if (!a.Has(col[p], col[q])) cells.push_back({col[p], col[q], 0.0});
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const auto& x, const auto& y) {
                            return x.row == y.row && x.col == y.col;
                          }),
              cells.end());
  for (auto& c : cells) c.value = model.Predict(c.row, c.col);
  return AdjacencyMatrix::FromEntries(a.dim(), std::move(cells));
}

}  // namespace hlp
