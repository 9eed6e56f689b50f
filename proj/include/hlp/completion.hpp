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

// Completion step: a biased latent-factor model fitted to the nonempty
// off-diagonal cells of a symmetric adjacency matrix,
//
//   y(i, j) = w0 + w[i] + w[j] + <v[i], v[j]>,
//
// trained by SGD on  sum_{i<j, A(i,j) > 0} (A(i,j) - y(i,j))^2 + reg * |theta|^2
// and then evaluated at the matrix's empty off-diagonal cells.

#ifndef HLP_COMPLETION_HPP_
#define HLP_COMPLETION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hlp/hypermatrix.hpp"

namespace hlp {

struct CompletionConfig {
  std::size_t latent_dim = 8;
  double reg = 0.01;
  double learning_rate = 0.01;
  std::size_t epochs = 100;
  std::uint64_t seed = 0;

  // Throws InvalidInputError when a field is out of range.
  void Validate() const;
};

struct FactorModel {
  double global_bias = 0.0;
  std::vector<double> bias;     // one per vertex
  std::vector<double> factors;  // num_vertices x latent_dim, row-major
  std::size_t latent_dim = 0;

  static FactorModel Zero(Index num_vertices, std::size_t latent_dim);

  Index num_vertices() const { return bias.size(); }

  std::span<const double> factor(Index i) const {
    return {factors.data() + i * latent_dim, latent_dim};
  }
  std::span<double> factor(Index i) {
    return {factors.data() + i * latent_dim, latent_dim};
  }

  double Predict(Index i, Index j) const;

  friend bool operator==(const FactorModel&, const FactorModel&) = default;
};

// A nonempty off-diagonal cell (i < j) with a positive value.
struct TrainingPair {
  Index i = 0;
  Index j = 0;
  double target = 0.0;
};

std::vector<TrainingPair> TrainingPairs(const AdjacencyMatrix& a);

// Full-batch regularized squared error over `pairs`.
double CompletionObjective(const FactorModel& model,
                           std::span<const TrainingPair> pairs, double reg);

// Exact gradient of CompletionObjective, laid out like the model.
FactorModel CompletionGradient(const FactorModel& model,
                               std::span<const TrainingPair> pairs,
                               double reg);

struct TrainResult {
  FactorModel model;
  // CompletionObjective after each epoch.
  std::vector<double> epoch_objective;
};

// Throws DegenerateInputError if `a` has no trainable cell.
TrainResult TrainWithHistory(const AdjacencyMatrix& a,
                             const CompletionConfig& cfg);

inline FactorModel Train(const AdjacencyMatrix& a,
                         const CompletionConfig& cfg) {
  return TrainWithHistory(a, cfg).model;
}

// Model predictions at every empty off-diagonal cell of `a`; the diagonal
// and a's nonempty cells are left empty.
AdjacencyMatrix PredictEmpty(const FactorModel& model,
                             const AdjacencyMatrix& a);

// PredictEmpty restricted to cells (i, j), i != j, where i and j share a
// column of `cliques`. These are the only cells the matching step reads.
AdjacencyMatrix PredictEmptyWithin(const FactorModel& model,
                                   const AdjacencyMatrix& a,
                                   const IncidenceMatrix& cliques);

}  // namespace hlp

#endif  // HLP_COMPLETION_HPP_
