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

#ifndef MKKM_MATROID_H_
#define MKKM_MATROID_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "mkkm/rational.h"

namespace mkkm {

// Subsets of the ground set {0, ..., n-1} as bitmasks; n <= 64.
using ElementSet = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

inline ElementSet Singleton(int element) { return ElementSet{1} << element; }
inline int Cardinality(ElementSet set) { return __builtin_popcountll(set); }
inline bool Contains(ElementSet set, int element) {
  return (set >> element) & 1U;
}
ElementSet MakeSet(const std::vector<int>& elements);
std::vector<int> Elements(ElementSet set);

// A finite matroid given by its rank oracle. Values are immutable and cheap
// to copy; copies share a synchronized rank cache.
class Matroid {
 public:
  enum class Kind { kUniform, kPartition, kLinear, kTruncated };

  // U(k, n): every k-subset is a basis.
  static Matroid Uniform(int n, int k);
  // One pick per part; the parts must be disjoint and cover 0..n-1.
  static Matroid Partition(const std::vector<std::vector<int>>& parts);
  // Column matroid of the given rational vectors (all of one dimension).
  static Matroid Linear(const std::vector<std::vector<Rational>>& vectors);
  // r'(A) = min(r(A), rank).
  static Matroid Truncate(const Matroid& inner, int rank);

  int ground_size() const;
  Kind kind() const;
  ElementSet ground_set() const;

  // r(A). Throws std::out_of_range for elements outside the ground set.
  int Rank(ElementSet subset) const;
  // r(W).
  int rank() const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

enum class SetKind { kIndependent, kCircuit, kDependent };

struct Classification {
  SetKind kind;
  bool is_basis;
};

Classification Classify(const Matroid& matroid, ElementSet subset);
bool IsIndependent(const Matroid& matroid, ElementSet subset);
bool IsCircuit(const Matroid& matroid, ElementSet subset);
bool IsBasis(const Matroid& matroid, ElementSet subset);

struct Flat {
  ElementSet elements = 0;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// cl(A) = {x : r(A + x) = r(A)}.
Flat Closure(const Matroid& matroid, ElementSet subset);

// All flats of rank r(M) - 1, sorted by element mask. For rank-1 matroids
// this is the single flat cl(empty set).
std::vector<Flat> Hyperplanes(const Matroid& matroid);

}  // namespace mkkm

#endif  // MKKM_MATROID_H_
