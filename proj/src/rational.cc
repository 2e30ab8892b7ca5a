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

#include "mkkm/rational.h"

#include <algorithm>
#include <cctype>
#include <utility>

namespace mkkm {
namespace {

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

mpz_class ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!IsDigits(s)) {
    throw InvalidInput("malformed rational literal '" + std::string(whole) +
                       "'");
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw InvalidInput("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!IsDigits(den_text)) {
      throw InvalidInput("malformed rational literal '" + std::string(text) +
                         "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !IsDigits(int_part)) ||
        (!frac_part.empty() && !IsDigits(frac_part))) {
      throw InvalidInput("malformed rational literal '" + std::string(text) +
                         "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }

  return Rational(ParseInteger(s, text));
}

std::string ToString(const Rational& value) { return value.get_str(10); }

double ToDouble(const Rational& value) { return value.get_d(); }

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational SquaredDistance(std::span<const Rational> a,
                         std::span<const Rational> b) {
  Rational sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

Point Add(std::span<const Rational> a, std::span<const Rational> b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point Subtract(std::span<const Rational> a, std::span<const Rational> b) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point Scale(std::span<const Rational> a, const Rational& factor) {
  Point out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * factor;
  return out;
}

Point Barycenter(std::span<const Point> points) {
  Point out(points.front().size(), Rational(0));
  for (const Point& p : points) {
    for (size_t i = 0; i < out.size(); ++i) out[i] += p[i];
  }
  Rational n(static_cast<long>(points.size()));
  for (Rational& c : out) c /= n;
  return out;
}

Rational SqrtUpperBound(const Rational& square, int bits) {
  if (square <= 0) return 0;
  // ceil(sqrt(square) * 2^bits) computed on integers.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
  mpq_class scaled = square * scale;
  mpz_class floor_val = scaled.get_num() / scaled.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_val.get_mpz_t());
  while (mpq_class(root * root) < scaled) ++root;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

int MatrixRank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (size_t cc = c; cc < cols; ++cc) rows[r][cc] -= factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

bool SolveUnique(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>* x) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<size_t> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) return false;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational factor = a[i][c] / a[r][c];
      for (size_t cc = c; cc < cols; ++cc) a[i][cc] -= factor * a[r][cc];
      b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  x->assign(cols, Rational(0));
  for (size_t i = 0; i < cols; ++i) (*x)[i] = b[i] / a[i][i];
  return true;
}

}  // namespace mkkm
