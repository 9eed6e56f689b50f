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


// Dense reference implementations used as test oracles. Nothing here calls
// into the library's sparse code paths.

#ifndef HLP_TESTS_ORACLES_HPP_
#define HLP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "hlp/hypermatrix.hpp"

namespace hlp::testing {

// Values plus an explicit presence mask, so a stored 0.0 stays distinct from
// an empty cell.
struct Dense {
  std::size_t n = 0;
  std::vector<double> value;
  std::vector<char> present;

  explicit Dense(std::size_t dim)
      : n(dim), value(dim * dim, 0.0), present(dim * dim, 0) {}

  void Set(std::size_t i, std::size_t j, double v) {
    value[i * n + j] = value[j * n + i] = v;
    present[i * n + j] = present[j * n + i] = 1;
  }
  bool Has(std::size_t i, std::size_t j) const { return present[i * n + j]; }
  double At(std::size_t i, std::size_t j) const { return value[i * n + j]; }
};

inline Dense ToDense(const AdjacencyMatrix& a) {
  Dense d(a.dim());
  for (const auto& e : a.entries()) d.Set(e.row, e.col, e.value);
  return d;
}

inline AdjacencyMatrix FromDense(const Dense& d) {
  std::vector<AdjacencyEntry> entries;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = i; j < d.n; ++j) {
      if (d.Has(i, j)) entries.push_back({i, j, d.At(i, j)});
    }
  }
  return AdjacencyMatrix::FromEntries(d.n, std::move(entries));
}

inline bool SameDense(const Dense& x, const Dense& y) {
  return x.n == y.n && x.value == y.value && x.present == y.present;
}

// S as a dense 0/1 matrix, then S * S^T by the triple loop.
inline Dense DenseProject(const IncidenceMatrix& s) {
  const std::size_t m = s.num_vertices();
  const std::size_t n = s.num_columns();
  std::vector<int> ind(m * n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (Index v : s.column(c)) ind[v * n + c] = 1;
  }
  Dense d(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      int sum = 0;
      for (std::size_t c = 0; c < n; ++c) sum += ind[i * n + c] * ind[j * n + c];
      if (sum != 0) d.Set(i, j, sum);
    }
  }
  return d;
}

// U * diag(w) * U^T, keeping cells whose sum is nonzero.
inline Dense DenseWeightedOuter(const IncidenceMatrix& u,
                                const std::vector<double>& w) {
  Dense d(u.num_vertices());
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) {
      double sum = 0.0;
      bool touched = false;
      for (std::size_t c = 0; c < u.num_columns(); ++c) {
        auto col = u.column(c);
        bool hi = false, hj = false;
        for (Index v : col) {
          hi = hi || v == i;
          hj = hj || v == j;
        }
        if (hi && hj && w[c] != 0.0) {
          sum += w[c];
          touched = true;
        }
      }
      if (touched) d.Set(i, j, sum);
    }
  }
  return d;
}

inline Dense DenseMask(const Dense& x, const Dense& support, bool keep_on) {
  Dense d(x.n);
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < x.n; ++j) {
      if (x.Has(i, j) && support.Has(i, j) == keep_on) d.Set(i, j, x.At(i, j));
    }
  }
  return d;
}

inline Dense DenseSum(const Dense& x, const Dense& y) {
  Dense d(x.n);
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t j = 0; j < x.n; ++j) {
      if (x.Has(i, j) || y.Has(i, j)) d.Set(i, j, x.At(i, j) + y.At(i, j));
    }
  }
  return d;
}

inline IncidenceMatrix RandomIncidence(std::mt19937_64& rng, std::size_t m,
                                       std::size_t columns,
                                       std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1,
                                                       std::min(max_size, m));
  std::vector<std::vector<Index>> cols;
  for (std::size_t c = 0; c < columns; ++c) {
    std::vector<Index> all(m);
    for (Index v = 0; v < m; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size_dist(rng));
    cols.push_back(std::move(all));
  }
  return IncidenceMatrix(m, std::move(cols));
}

// Symmetric matrix with roughly `density` of cells present. Values are small
// integers, zero included, so stored zeros get exercised.
inline AdjacencyMatrix RandomAdjacency(std::mt19937_64& rng, std::size_t m,
                                       double density) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-3, 3);
  Dense d(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (keep(rng)) d.Set(i, j, val(rng));
    }
  }
  return FromDense(d);
}

// Squared Frobenius residual of [U diag(w) U^T]_{A-bar} - T over all
// off-diagonal cells (both triangles), plus l1 * sum(w).
inline double DenseMatchObjective(const IncidenceMatrix& u,
                                  const AdjacencyMatrix& a,
                                  const AdjacencyMatrix& target,
                                  const std::vector<double>& w, double l1) {
  const Dense fit = DenseWeightedOuter(u, w);
  const Dense da = ToDense(a);
  const Dense dt = ToDense(target);
  double sum = 0.0;
  for (std::size_t i = 0; i < fit.n; ++i) {
    for (std::size_t j = 0; j < fit.n; ++j) {
      if (i == j || da.Has(i, j)) continue;
      const double r = fit.At(i, j) - dt.At(i, j);
      sum += r * r;
    }
  }
  for (double x : w) sum += l1 * x;
  return sum;
}

struct PlantedMatch {
  IncidenceMatrix train;
  IncidenceMatrix candidates;
  AdjacencyMatrix a;
  AdjacencyMatrix target;
  std::vector<double> planted;  // 0/1 per candidate
  bool unique = false;          // planted is the only zero-residual subset
};

// Random small instance whose target is the masked outer product of a planted
// subset of the candidates. Uniqueness is checked by enumerating every subset
// with the dense residual.
inline PlantedMatch RandomPlantedMatch(std::mt19937_64& rng, std::size_t max_m,
                                       std::size_t max_candidates) {
  PlantedMatch p;
  const std::size_t m = 4 + rng() % (max_m - 3);
  const std::size_t n = 1 + rng() % max_candidates;
  p.train = RandomIncidence(rng, m, 1 + rng() % 4, 3);
  p.candidates = RandomIncidence(rng, m, n, 4);
  p.a = Project(p.train);
  p.planted.assign(n, 0.0);
  for (double& x : p.planted) x = (rng() % 2) ? 1.0 : 0.0;

  const Dense fit = DenseWeightedOuter(p.candidates, p.planted);
  const Dense da = ToDense(p.a);
  Dense t(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (fit.Has(i, j) && !da.Has(i, j)) t.Set(i, j, fit.At(i, j));
    }
  }
  p.target = FromDense(t);

  std::size_t zero_residual = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<double> w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = (mask >> c) & 1 ? 1.0 : 0.0;
    if (DenseMatchObjective(p.candidates, p.a, p.target, w, 0.0) == 0.0) {
      ++zero_residual;
    }
  }
  p.unique = zero_residual == 1;
  return p;
}

}  // namespace hlp::testing

#endif  // HLP_TESTS_ORACLES_HPP_
