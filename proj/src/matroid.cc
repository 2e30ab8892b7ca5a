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

#include "mkkm/matroid.h"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace mkkm {

ElementSet MakeSet(const std::vector<int>& elements) {
  ElementSet set = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw std::out_of_range("element id " + std::to_string(e) +
                              " out of range");
    }
    set |= Singleton(e);
  }
  return set;
}

std::vector<int> Elements(ElementSet set) {
  std::vector<int> out;
  while (set != 0) {
    int e = __builtin_ctzll(set);
    out.push_back(e);
    set &= set - 1;
  }
  return out;
}

struct Matroid::Impl {
  Kind kind;
  int n = 0;
  // kUniform / kTruncated cap.
  int cap = 0;
  // kPartition: part mask per part.
  std::vector<ElementSet> parts;
  // kLinear: integer-scaled vectors.
  std::vector<std::vector<mpz_class>> vectors;
  // kTruncated.
  std::shared_ptr<const Impl> inner;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<ElementSet, int> cache;

  ElementSet Ground() const {
    return n == 64 ? ~ElementSet{0} : (Singleton(n) - 1);
  }

  int Compute(ElementSet subset) const {
    switch (kind) {
      case Kind::kUniform:
        return std::min(Cardinality(subset), cap);
      case Kind::kPartition: {
        int r = 0;
        for (ElementSet part : parts) r += (part & subset) != 0;
        return r;
      }
      case Kind::kLinear:
        return LinearRank(subset);
      case Kind::kTruncated:
        return std::min(inner->Rank(subset), cap);
    }
    return 0;
  }

  // Fraction-free (Bareiss) elimination over the integers.
  int LinearRank(ElementSet subset) const {
    std::vector<std::vector<mpz_class>> m;
    for (int e : Elements(subset)) m.push_back(vectors[e]);
    if (m.empty()) return 0;
    const size_t cols = m.front().size();
    size_t rank = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
      size_t pivot = rank;
      while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[pivot], m[rank]);
      for (size_t r = rank + 1; r < m.size(); ++r) {
        for (size_t cc = c + 1; cc < cols; ++cc) {
          m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
        }
        m[r][c] = 0;
      }
      prev = m[rank][c];
      ++rank;
    }
    return static_cast<int>(rank);
  }

  int Rank(ElementSet subset) const {
    if ((subset & ~Ground()) != 0) {
      throw std::out_of_range("subset contains element outside ground set");
    }
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      if (auto it = cache.find(subset); it != cache.end()) return it->second;
    }
    int r = Compute(subset);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(subset, r);
    return r;
  }
};

Matroid::Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Matroid Matroid::Uniform(int n, int k) {
  if (n <= 0) throw InvalidInput("uniform matroid needs a nonempty ground set");
  if (n > kMaxGroundSize) throw InvalidInput("ground set exceeds 64 elements");
  if (k < 0 || k > n) throw InvalidInput("uniform matroid needs 0 <= k <= n");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kUniform;
  impl->n = n;
  impl->cap = k;
  return Matroid(std::move(impl));
}

Matroid Matroid::Partition(const std::vector<std::vector<int>>& parts) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kPartition;
  ElementSet seen = 0;
  int max_id = -1;
  for (const auto& part : parts) {
    ElementSet mask = 0;
    for (int e : part) {
      if (e < 0 || e >= kMaxGroundSize) {
        throw InvalidInput("partition element " + std::to_string(e) +
                           " out of range");
      }
      if (Contains(seen, e)) {
        throw InvalidInput("partition parts overlap at element " +
                           std::to_string(e));
      }
      seen |= Singleton(e);
      mask |= Singleton(e);
      max_id = std::max(max_id, e);
    }
    if (mask == 0) throw InvalidInput("partition has an empty part");
    impl->parts.push_back(mask);
  }
  if (max_id < 0) throw InvalidInput("partition matroid has empty ground set");
  impl->n = max_id + 1;
  if (seen != impl->Ground()) {
    throw InvalidInput("partition parts leave a gap in 0..n-1");
  }
  return Matroid(std::move(impl));
}

Matroid Matroid::Linear(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) throw InvalidInput("linear matroid needs vectors");
  if (vectors.size() > kMaxGroundSize) {
    throw InvalidInput("ground set exceeds 64 elements");
  }
  const size_t dim = vectors.front().size();
  if (dim == 0) throw InvalidInput("linear matroid vectors must be nonempty");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kLinear;
  impl->n = static_cast<int>(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw InvalidInput("linear matroid vectors differ in dimension");
    }
    // Scale by the lcm of denominators; rank is unchanged.
    mpz_class lcm = 1;
    for (const Rational& c : v) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> row;
    row.reserve(dim);
    for (const Rational& c : v) row.push_back(c.get_num() * (lcm / c.get_den()));
    impl->vectors.push_back(std::move(row));
  }
  return Matroid(std::move(impl));
}

Matroid Matroid::Truncate(const Matroid& inner, int rank) {
  if (rank < 0) throw InvalidInput("truncation rank must be nonnegative");
  if (rank > inner.rank()) {
    throw InvalidInput("truncation rank exceeds the matroid rank");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kTruncated;
  impl->n = inner.ground_size();
  impl->cap = rank;
  impl->inner = inner.impl_;
  return Matroid(std::move(impl));
}

int Matroid::ground_size() const { return impl_->n; }
Matroid::Kind Matroid::kind() const { return impl_->kind; }
ElementSet Matroid::ground_set() const { return impl_->Ground(); }
int Matroid::Rank(ElementSet subset) const { return impl_->Rank(subset); }
int Matroid::rank() const { return impl_->Rank(impl_->Ground()); }

Classification Classify(const Matroid& matroid, ElementSet subset) {
  const int size = Cardinality(subset);
  const int r = matroid.Rank(subset);
  if (r == size) {
    return {SetKind::kIndependent, size == matroid.rank()};
  }
  if (r == size - 1) {
    bool minimal = true;
    for (int e : Elements(subset)) {
      if (matroid.Rank(subset & ~Singleton(e)) != size - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) return {SetKind::kCircuit, false};
  }
  return {SetKind::kDependent, false};
}

bool IsIndependent(const Matroid& matroid, ElementSet subset) {
  return matroid.Rank(subset) == Cardinality(subset);
}

bool IsCircuit(const Matroid& matroid, ElementSet subset) {
  return Classify(matroid, subset).kind == SetKind::kCircuit;
}

bool IsBasis(const Matroid& matroid, ElementSet subset) {
  return Classify(matroid, subset).is_basis;
}

Flat Closure(const Matroid& matroid, ElementSet subset) {
  const int r = matroid.Rank(subset);
  ElementSet closure = subset;
  for (int e = 0; e < matroid.ground_size(); ++e) {
    if (Contains(subset, e)) continue;
    if (matroid.Rank(subset | Singleton(e)) == r) closure |= Singleton(e);
  }
  return {closure, r};
}

namespace {

void CloseIndependentSubsets(const Matroid& matroid, int target, int start,
                             ElementSet current, int size,
                             std::set<ElementSet>* out) {
  if (size == target) {
    out->insert(Closure(matroid, current).elements);
    return;
  }
  for (int e = start; e < matroid.ground_size(); ++e) {
    ElementSet next = current | Singleton(e);
    if (matroid.Rank(next) != size + 1) continue;
    CloseIndependentSubsets(matroid, target, e + 1, next, size + 1, out);
  }
}

}  // namespace

std::vector<Flat> Hyperplanes(const Matroid& matroid) {
  const int k = matroid.rank();
  if (k < 1) throw InvalidInput("hyperplanes need a matroid of rank >= 1");
  std::set<ElementSet> flats;
  CloseIndependentSubsets(matroid, k - 1, 0, 0, 0, &flats);
  std::vector<Flat> out;
  out.reserve(flats.size());
  for (ElementSet f : flats) out.push_back({f, k - 1});
  return out;
}

}  // namespace mkkm
