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


#include <random>
#include <vector>

#include "doctest.h"
#include "hlp/error.hpp"
#include "hlp/hypermatrix.hpp"
#include "oracles.hpp"

namespace hlp {
namespace {

using testing::DenseMask;
using testing::DenseProject;
using testing::DenseSum;
using testing::DenseWeightedOuter;
using testing::SameDense;
using testing::ToDense;

TEST_CASE("incidence columns are sorted and validated") {
  IncidenceMatrix s(5, {{3, 1}, {4, 0, 2}});
  CHECK(s.column(0)[0] == 1);
  CHECK(s.column(0)[1] == 3);
  CHECK(s.Contains(std::vector<Index>{1, 3}));
  CHECK_FALSE(s.Contains(std::vector<Index>{1, 2}));
  CHECK_THROWS_AS(IncidenceMatrix(3, {{}}), InvalidInputError);
  CHECK_THROWS_AS(IncidenceMatrix(3, {{0, 3}}), InvalidInputError);
  CHECK_THROWS_AS(IncidenceMatrix(3, {{1, 1}}), InvalidInputError);
  CHECK_THROWS_AS(s.Concat(IncidenceMatrix(4, {{0}})), DimensionError);
}

TEST_CASE("project two overlapping columns") {
  const auto a = Project(IncidenceMatrix(4, {{0, 1}, {1, 2}}));
  CHECK(a.At(0, 0) == 1);
  CHECK(a.At(1, 1) == 2);
  CHECK(a.At(2, 2) == 1);
  CHECK(a.At(0, 1) == 1);
  CHECK(a.At(1, 0) == 1);
  CHECK(a.At(1, 2) == 1);
  CHECK_FALSE(a.Has(0, 2));
  for (Index j = 0; j < 4; ++j) CHECK_FALSE(a.Has(3, j));
}

TEST_CASE("project edge cases") {
  CHECK(Project(IncidenceMatrix(3, {})).all_empty());
  const auto a = Project(IncidenceMatrix(3, {{0, 1, 2}}));
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) CHECK(a.At(i, j) == 1);
  }
}

TEST_CASE("project matches dense product") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 20;
    const auto s = testing::RandomIncidence(rng, m, rng() % 12, 6);
    REQUIRE(SameDense(ToDense(Project(s)), DenseProject(s)));
  }
}

TEST_CASE("masking examples") {
  std::mt19937_64 rng(3);
  const auto x = testing::RandomAdjacency(rng, 6, 0.5);
  const AdjacencyMatrix empty(6);
  CHECK(MaskOn(x, empty).all_empty());
  CHECK(MaskOn(x, x) == x);
  CHECK(MaskOff(x, x).all_empty());
  CHECK(MaskOff(x, empty) == x);

  const auto ones = AdjacencyMatrix::FromEntries(
      2, {{0, 0, 1.0}, {0, 1, 1.0}, {1, 1, 1.0}});
  const auto support = AdjacencyMatrix::FromEntries(2, {{0, 1, 7.0}});
  const auto kept = MaskOn(ones, support);
  CHECK(kept.stored_count() == 1);
  CHECK(kept.At(0, 1) == 1.0);
  CHECK(kept.At(1, 0) == 1.0);
  CHECK_THROWS_AS(MaskOn(x, AdjacencyMatrix(5)), DimensionError);
}

TEST_CASE("stored zero is not empty") {
  const auto x = AdjacencyMatrix::FromEntries(3, {{0, 1, 0.0}});
  CHECK(x.Has(0, 1));
  CHECK_FALSE(x.Has(0, 2));
  const auto y = AdjacencyMatrix::FromEntries(3, {{0, 1, 5.0}, {0, 2, 5.0}});
  CHECK(MaskOn(y, x).stored_count() == 1);
  CHECK(MaskOff(y, x).At(0, 2) == 5.0);
}

TEST_CASE("mask partition on random instances") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 15;
    const auto x = testing::RandomAdjacency(rng, m, 0.6);
    const auto a = testing::RandomAdjacency(rng, m, 0.4);
    const auto on = MaskOn(x, a);
    const auto off = MaskOff(x, a);
    REQUIRE(on + off == x);
    REQUIRE(SameDense(ToDense(on), DenseMask(ToDense(x), ToDense(a), true)));
    REQUIRE(SameDense(ToDense(off), DenseMask(ToDense(x), ToDense(a), false)));
  }
}

TEST_CASE("decompose examples") {
  const auto a = Project(IncidenceMatrix(4, {{0, 1}, {1, 2}}));
  const auto none = Decompose(a, AdjacencyMatrix(4));
  CHECK(none.overlapping == a);
  CHECK(none.novel.all_empty());

  const auto delta = Project(IncidenceMatrix(4, {{0, 2}}));
  const auto fresh = Decompose(AdjacencyMatrix(4), delta);
  CHECK(fresh.overlapping.all_empty());
  CHECK(fresh.novel == delta);

  const auto d = Decompose(a, Project(IncidenceMatrix(4, {{0, 1}})));
  CHECK(d.overlapping.At(0, 1) == 2);
  CHECK(d.overlapping.At(0, 0) == 2);
  CHECK(d.overlapping.At(1, 1) == 3);
  CHECK(d.novel.all_empty());
}

TEST_CASE("decompose: disjoint supports and exact sum") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 15;
    const auto a = testing::RandomAdjacency(rng, m, 0.5);
    const auto delta = testing::RandomAdjacency(rng, m, 0.5);
    const auto d = Decompose(a, delta);
    for (const auto& e : d.novel.entries()) REQUIRE_FALSE(a.Has(e.row, e.col));
    REQUIRE(d.overlapping + d.novel == a + delta);
  }
}

TEST_CASE("weighted outer product") {
  const IncidenceMatrix u(4, {{0, 1}, {1, 2, 3}});
  const auto a = Project(IncidenceMatrix(4, {{0, 1, 2}}));
  CHECK(AddWeightedOuter(a, u, std::vector<double>{0.0, 0.0}, true) == a);

  const IncidenceMatrix one(4, {{0, 1}});
  const auto bumped = AddWeightedOuter(a, one, std::vector<double>{1.0}, true);
  CHECK(bumped.At(0, 1) == 2);
  CHECK(bumped.At(0, 0) == 2);
  CHECK(bumped.At(1, 1) == 2);
  CHECK(bumped.At(0, 2) == 1);

  const std::vector<double> w = {0.5, 0.25};
  const auto expect = DenseSum(
      ToDense(a), DenseMask(DenseWeightedOuter(u, w), ToDense(a), true));
  CHECK(SameDense(ToDense(AddWeightedOuter(a, u, w, true)), expect));
  CHECK(SameDense(ToDense(WeightedOuter(u, w)), DenseWeightedOuter(u, w)));
  CHECK_THROWS_AS(WeightedOuter(u, std::vector<double>{1.0}), DimensionError);
}

TEST_CASE("weighted outer matches dense oracle on random instances") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + rng() % 12;
    const auto u = testing::RandomIncidence(rng, m, 1 + rng() % 6, 5);
    const auto a = Project(testing::RandomIncidence(rng, m, rng() % 6, 4));
    std::vector<double> w(u.num_columns());
    for (double& x : w) x = unit(rng) < 0.3 ? 0.0 : unit(rng);
    const auto got = AddWeightedOuter(a, u, w, true);
    const auto want = DenseSum(
        ToDense(a), DenseMask(DenseWeightedOuter(u, w), ToDense(a), true));
    REQUIRE(SameDense(ToDense(got), want));
  }
}

TEST_CASE("outputs stay symmetric") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng() % 10;
    const auto x = testing::RandomAdjacency(rng, m, 0.5);
    for (const auto& e : x.entries()) {
      REQUIRE(e.row <= e.col);
      REQUIRE(x.At(e.col, e.row) == e.value);
    }
  }
}

}  // namespace
}  // namespace hlp
