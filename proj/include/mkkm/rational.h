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

#ifndef MKKM_RATIONAL_H_
#define MKKM_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mkkm {

using Rational = mpq_class;

// A point in R^n with exact rational coordinates.
using Point = std::vector<Rational>;

// Raised for malformed user input (bad rational literals, inconsistent
// dimensions, malformed matroid or polytope specs).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "p/q", an integer, or a decimal such as "-0.125" exactly.
Rational ParseRational(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is one).
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
Rational SquaredDistance(std::span<const Rational> a,
                         std::span<const Rational> b);
Point Add(std::span<const Rational> a, std::span<const Rational> b);
Point Subtract(std::span<const Rational> a, std::span<const Rational> b);
Point Scale(std::span<const Rational> a, const Rational& factor);

// Arithmetic mean of a nonempty list of points.
Point Barycenter(std::span<const Point> points);

// Smallest dyadic rational m / 2^bits with (m / 2^bits)^2 >= square.
Rational SqrtUpperBound(const Rational& square, int bits = 30);

// Rank of the matrix whose rows are `rows` (all of equal length).
int MatrixRank(std::vector<std::vector<Rational>> rows);

// Solves the square or overdetermined system A x = b. Returns false when the
// columns of A are linearly dependent or the system is inconsistent.
bool SolveUnique(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>* x);

}  // namespace mkkm

#endif  // MKKM_RATIONAL_H_
