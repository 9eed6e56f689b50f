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

#include "hlp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hlp/error.hpp"

namespace hlp {
namespace {

void CheckSameVertices(const IncidenceMatrix& s, const IncidenceMatrix& u) {
  if (s.num_vertices() != u.num_vertices()) {
    throw DimensionError("training has " + std::to_string(s.num_vertices()) +
                         " vertices, candidates have " +
                         std::to_string(u.num_vertices()));
  }
}

struct CandidatePair {
  Index lo;
  Index hi;
  std::size_t candidate;
};

// Every vertex pair of every candidate with at least two vertices.
std::vector<CandidatePair> CandidatePairs(const IncidenceMatrix& u) {
  std::vector<CandidatePair> pairs;
  for (std::size_t c = 0; c < u.num_columns(); ++c) {
    auto col = u.column(c);
    for (std::size_t p = 0; p < col.size(); ++p) {
      for (std::size_t q = p + 1; q < col.size(); ++q) {
        pairs.push_back({col[p], col[q], c});
      }
    }
  }
  return pairs;
}

// Divides per-candidate pair sums by m(m-1)/2; singletons stay 0.
void AveragePairs(const IncidenceMatrix& u, ScoreVector& sums) {
  for (std::size_t c = 0; c < u.num_columns(); ++c) {
    const double m = static_cast<double>(u.column(c).size());
    if (m >= 2) sums[c] /= m * (m - 1) / 2.0;
  }
}

}  // namespace

std::vector<std::vector<Index>> TrainingGraph(const IncidenceMatrix& s) {
  std::vector<std::vector<Index>> adj(s.num_vertices());
  for (const auto& col : s.columns()) {
    for (Index a : col) {
      for (Index b : col) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

ScoreVector ScoreHcn(const IncidenceMatrix& s, const IncidenceMatrix& u) {
  CheckSameVertices(s, u);
  const auto graph = TrainingGraph(s);
  ScoreVector scores(u.num_columns(), 0.0);
  std::vector<Index> common;
  for (const auto& p : CandidatePairs(u)) {
    common.clear();
    std::set_intersection(graph[p.lo].begin(), graph[p.lo].end(),
                          graph[p.hi].begin(), graph[p.hi].end(),
                          std::back_inserter(common));
    scores[p.candidate] += static_cast<double>(common.size());
  }
  AveragePairs(u, scores);
  return scores;
}

void KatzConfig::Validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidInputError("Katz beta must be finite and > 0");
  }
}

ScoreVector ScoreHkatz(const IncidenceMatrix& s, const IncidenceMatrix& u,
                       const KatzConfig& cfg) {
  cfg.Validate();
  CheckSameVertices(s, u);
  const auto graph = TrainingGraph(s);
  const Index m = s.num_vertices();

  auto pairs = CandidatePairs(u);
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.lo < y.lo;
  });

  ScoreVector scores(u.num_columns(), 0.0);
  std::vector<double> walks(m), next(m), katz(m);
  for (std::size_t lo = 0; lo < pairs.size();) {
    std::size_t hi = lo;
    while (hi < pairs.size() && pairs[hi].lo == pairs[lo].lo) ++hi;

    // Walk counts from one source, one length at a time.
    std::fill(walks.begin(), walks.end(), 0.0);
    std::fill(katz.begin(), katz.end(), 0.0);
    walks[pairs[lo].lo] = 1.0;
    double weight = 1.0;
    for (std::size_t len = 1; len <= cfg.max_path_length; ++len) {
      std::fill(next.begin(), next.end(), 0.0);
      for (Index v = 0; v < m; ++v) {
        if (walks[v] == 0.0) continue;
        for (Index w : graph[v]) next[w] += walks[v];
      }
      walks.swap(next);
      weight *= cfg.beta;
      for (Index v = 0; v < m; ++v) katz[v] += weight * walks[v];
    }
    for (std::size_t x = lo; x < hi; ++x) {
      scores[pairs[x].candidate] += katz[pairs[x].hi];
    }
    lo = hi;
  }
  AveragePairs(u, scores);
  return scores;
}

void ShcConfig::Validate() const {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw InvalidInputError("SHC xi must lie in [0, 1]");
  }
  if (!(isolated_degree > 0.0)) {
    throw InvalidInputError("SHC isolated_degree must be > 0");
  }
}

ScoreVector ScoreShc(const IncidenceMatrix& s, const IncidenceMatrix& u,
                     const ShcConfig& cfg) {
  cfg.Validate();
  CheckSameVertices(s, u);
  const IncidenceMatrix all = s.Concat(u);
  const Eigen::Index nodes = static_cast<Eigen::Index>(all.num_columns());
  const Eigen::Index edges = static_cast<Eigen::Index>(all.num_vertices());

  Eigen::VectorXd node_degree = Eigen::VectorXd::Zero(nodes);
  Eigen::VectorXd edge_degree = Eigen::VectorXd::Zero(edges);
  for (Eigen::Index c = 0; c < nodes; ++c) {
    for (Index v : all.column(c)) {
      node_degree[c] += 1.0;
      edge_degree[static_cast<Eigen::Index>(v)] += 1.0;
    }
  }
  for (auto& d : node_degree) {
    if (d == 0.0) d = cfg.isolated_degree;
  }

  // Theta = B B^T with B = Dv^{-1/2} H De^{-1/2}.
  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index c = 0; c < nodes; ++c) {
    for (Index v : all.column(c)) {
      const auto e = static_cast<Eigen::Index>(v);
      triplets.emplace_back(
          c, e, 1.0 / std::sqrt(node_degree[c] * edge_degree[e]));
    }
  }
  Eigen::SparseMatrix<double> b(nodes, edges);
  b.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::VectorXd y = Eigen::VectorXd::Zero(nodes);
  y.head(static_cast<Eigen::Index>(s.num_columns())).setOnes();

  const double xi = cfg.xi;
  auto solve = [&](const Eigen::MatrixXd& system, const Eigen::VectorXd& rhs) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
    // LDLT pseudo-inverts zero pivots and its rcond() does not see them, so
    // compare the pivots directly.
    const Eigen::VectorXd pivots = ldlt.vectorD().cwiseAbs();
    if (ldlt.info() != Eigen::Success ||
        pivots.minCoeff() < 1e-12 * pivots.maxCoeff() ||
        ldlt.rcond() < 1e-12) {
      throw SingularSystemError("SHC: I - xi * Theta is singular at xi = " +
                                std::to_string(xi) + "; use a smaller xi");
    }
    return Eigen::VectorXd(ldlt.solve(rhs));
  };

  Eigen::VectorXd f;
  if (nodes <= edges) {
    const Eigen::MatrixXd theta = Eigen::MatrixXd(b * b.transpose());
    Eigen::MatrixXd system = -xi * theta;
    system.diagonal().array() += 1.0;
    f = solve(system, y);
  } else {
    // (I - xi B B^T)^{-1} = I + xi B (I - xi B^T B)^{-1} B^T.
    const Eigen::MatrixXd gram = Eigen::MatrixXd(b.transpose() * b);
    Eigen::MatrixXd system = -xi * gram;
    system.diagonal().array() += 1.0;
    const Eigen::VectorXd bty = b.transpose() * y;
    f = y + xi * (b * solve(system, bty));
  }

  const auto offset = static_cast<Eigen::Index>(s.num_columns());
  ScoreVector scores(u.num_columns());
  for (std::size_t c = 0; c < scores.size(); ++c) {
    scores[c] = f[offset + static_cast<Eigen::Index>(c)];
  }
  return scores;
}

ScoreVector ScoreRandom(std::size_t num_candidates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ScoreVector scores(num_candidates);
  for (double& v : scores) v = unit(rng);
  return scores;
}

}  // namespace hlp
