// Copyright 2026 The Authors.
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

#include "doctest.h"
#include "mkkm/matroid.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace mkkm {
namespace {

std::vector<std::vector<Rational>> PaperVectors() {
  return {{1, 1, 0}, {-1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
}

TEST_CASE("uniform rank is min(|A|, k)") {
  const Matroid m = Matroid::Uniform(4, 2);
  CHECK(m.Rank(MakeSet({0, 1, 2})) == 2);
  CHECK(m.Rank(MakeSet({3})) == 1);
  CHECK(m.Rank(0) == 0);
  CHECK(m.rank() == 2);
}

TEST_CASE("paper linear matroid") {
  const Matroid m = Matroid::Linear(PaperVectors());
  CHECK(m.Rank(m.ground_set()) == 3);
  CHECK(m.Rank(MakeSet({0, 2})) == 2);

  const Classification c = Classify(m, MakeSet({0, 1, 2}));
  CHECK(c.kind == SetKind::kCircuit);
  CHECK_FALSE(c.is_basis);
  const Classification b = Classify(m, MakeSet({0, 2, 3}));
  CHECK(b.kind == SetKind::kIndependent);
  CHECK(b.is_basis);
  CHECK(Classify(m, 0).kind == SetKind::kIndependent);
  CHECK(Classify(m, MakeSet({0, 1, 2, 3})).kind == SetKind::kDependent);

  CHECK(Closure(m, MakeSet({0, 2})).elements == MakeSet({0, 1, 2}));
  CHECK(Closure(m, m.ground_set()).elements == m.ground_set());

  std::vector<ElementSet> got;
  for (const Flat& h : Hyperplanes(m)) {
    CHECK(h.rank == 2);
    got.push_back(h.elements);
  }
  std::sort(got.begin(), got.end());
  std::vector<ElementSet> want = {MakeSet({0, 1, 2}), MakeSet({0, 3}),
                                  MakeSet({1, 3}), MakeSet({2, 3})};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("partition and truncation") {
  const Matroid p = Matroid::Partition({{0, 1}, {2, 3}});
  CHECK(p.Rank(MakeSet({0, 1, 2})) == 2);
  CHECK(p.rank() == 2);
  CHECK(IsCircuit(p, MakeSet({0, 1})));

  const Matroid t = Matroid::Truncate(Matroid::Uniform(5, 5), 3);
  CHECK(t.Rank(MakeSet({0, 1, 2, 3})) == 3);
  CHECK(t.kind() == Matroid::Kind::kTruncated);
}

TEST_CASE("small uniform examples") {
  CHECK(Closure(Matroid::Uniform(4, 2), MakeSet({0})).elements == MakeSet({0}));
  std::vector<Flat> u43 = Hyperplanes(Matroid::Uniform(4, 3));
  CHECK(u43.size() == 6);
  for (const Flat& h : u43) CHECK(Cardinality(h.elements) == 2);
  std::vector<Flat> u11 = Hyperplanes(Matroid::Uniform(1, 1));
  REQUIRE(u11.size() == 1);
  CHECK(u11[0].elements == 0);
}

TEST_CASE("malformed matroids are rejected") {
  CHECK_THROWS_AS(Matroid::Partition({{0, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::Partition({{0}, {2}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::Uniform(0, 0), InvalidInput);
  CHECK_THROWS_AS(Matroid::Truncate(Matroid::Uniform(3, 2), -1), InvalidInput);
  CHECK_THROWS_AS(Matroid::Linear({{1, 0}, {1}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::Uniform(65, 2), InvalidInput);
}

TEST_CASE("out-of-range elements throw") {
  const Matroid m = Matroid::Uniform(3, 2);
  CHECK_THROWS_AS(m.Rank(Singleton(5)), std::out_of_range);
  CHECK_THROWS_AS(Closure(m, Singleton(3)), std::out_of_range);
  CHECK_THROWS_AS(Classify(m, Singleton(4)), std::out_of_range);
}

TEST_CASE("rank axioms and closure properties on random matroids") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const int rank = 1 + trial % 4;
    testing::RandomMatroid rm = testing::MakeMatroid(rng, rank, trial % 3);
    const Matroid& m = rm.matroid;
    CAPTURE(rm.description);
    const int n = m.ground_size();
    const ElementSet ground = m.ground_set();
    std::uniform_int_distribution<ElementSet> pick(0, ground);
    CHECK(m.Rank(0) == 0);
    for (int i = 0; i < 500; ++i) {
      const ElementSet a = pick(rng) & ground;
      const ElementSet b = pick(rng) & ground;
      const int ra = m.Rank(a);
      CHECK(ra == rm.reference_rank(a));
      CHECK(ra >= 0);
      CHECK(ra <= Cardinality(a));
      CHECK(m.Rank(a & b) <= ra);
      CHECK(m.Rank(a | b) + m.Rank(a & b) <= ra + m.Rank(b));
      const int x = testing::Uniform(rng, 0, n - 1);
      const int rx = m.Rank(a | Singleton(x));
      CHECK((rx == ra || rx == ra + 1));

      const Flat cl = Closure(m, a);
      CHECK((a & ~cl.elements) == 0);
      CHECK(cl.rank == ra);
      CHECK(Closure(m, cl.elements).elements == cl.elements);
      for (int y = 0; y < n; ++y) {
        CHECK(Contains(cl.elements, y) == (m.Rank(a | Singleton(y)) == ra));
      }
      if (IsCircuit(m, a)) {
        CHECK(ra == Cardinality(a) - 1);
        for (int y : Elements(a)) CHECK(IsIndependent(m, a & ~Singleton(y)));
      }
      CHECK(IsCircuit(m, a) == oracle::BruteIsCircuit(m, a));
    }
    std::vector<ElementSet> got;
    for (const Flat& h : Hyperplanes(m)) got.push_back(h.elements);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::BruteHyperplanes(m));
  }
}

TEST_CASE("linear rank matches independent row reduction") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = testing::Uniform(rng, 1, 6);
    const int dim = testing::Uniform(rng, 1, 4);
    std::vector<std::vector<Rational>> vectors(count, std::vector<Rational>(dim));
    for (auto& v : vectors) {
      for (Rational& c : v) c = Rational(testing::Uniform(rng, -2, 2), testing::Uniform(rng, 1, 3));
      for (Rational& c : v) c.canonicalize();
    }
    const Matroid m = Matroid::Linear(vectors);
    for (ElementSet a = 0; a < (ElementSet{1} << count); ++a) {
      CHECK(m.Rank(a) == oracle::LinearRank(vectors, a));
    }
  }
}

TEST_CASE("truncation keeps exactly the small independent sets") {
  const Matroid inner = Matroid::Linear(PaperVectors());
  const Matroid t = Matroid::Truncate(inner, 2);
  for (ElementSet a = 0; a < 16; ++a) {
    CHECK(IsIndependent(t, a) == (IsIndependent(inner, a) && Cardinality(a) <= 2));
  }
}

}  // namespace
}  // namespace mkkm
