// Copyright 2026 The xorgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Slow, independent reference computations used only by tests. None of these
// call into the library's solvers.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"

namespace oracle {

using xorgames::BigInt;
using xorgames::BigRational;
using xorgames::Game;

/// Classical value by trying all 2^{kn} answer tables.
inline BigRational classical_value(const Game& g) {
  const int bits = g.k() * g.n();
  std::size_t best = 0;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << bits); ++t) {
    std::size_t wins = 0;
    for (const auto& c : g.clauses()) {
      int prod = 1;
      for (int a = 0; a < g.k(); ++a) {
        if ((t >> (a * g.n() + c.query[a] - 1)) & 1u) prod = -prod;
      }
      if (prod == c.sign) ++wins;
    }
    best = std::max(best, wins);
  }
  return BigRational(static_cast<long long>(best), static_cast<long long>(g.m()));
}

/// Some x with Mx = b over F2 by exhaustive search, rows as bit vectors.
inline bool f2_solvable(const std::vector<std::vector<int>>& m, const std::vector<int>& b) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < m.size() && ok; ++r) {
      int s = 0;
      for (std::size_t c = 0; c < cols; ++c) s ^= m[r][c] & static_cast<int>((x >> c) & 1u);
      ok = s == b[r];
    }
    if (ok) return true;
  }
  return false;
}

/// Determinant by cofactor expansion along the first row.
inline BigInt determinant(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][j] * determinant(minor);
    det += j % 2 == 0 ? term : BigInt(-term);
  }
  return det;
}

/// All nonzero integer vectors with entries in [-bound, bound] and M v = 0.
inline std::vector<std::vector<long long>> small_kernel_vectors(
    const std::vector<std::vector<long long>>& m, std::size_t cols, int bound) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(cols, -bound);
  while (true) {
    bool zero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
    if (!zero) {
      bool in_kernel = true;
      for (const auto& row : m) {
        long long s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += row[c] * v[c];
        if (s != 0) {
          in_kernel = false;
          break;
        }
      }
      if (in_kernel) out.push_back(v);
    }
    std::size_t i = 0;
    while (i < cols && v[i] == bound) v[i++] = -bound;
    if (i == cols) break;
    ++v[i];
  }
  return out;
}

/// Word reduction by repeated scanning for adjacent equal letters.
inline std::vector<int> rewrite_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Refutation check written directly from the definition.
inline bool is_refutation(const Game& g, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return false;
  int sign = 1;
  for (std::size_t i : idx) sign *= g.clauses().at(i - 1).sign;
  if (sign != -1) return false;
  for (int a = 0; a < g.k(); ++a) {
    std::vector<int> wire;
    for (std::size_t i : idx) wire.push_back(g.clauses()[i - 1].query[a]);
    if (!rewrite_reduce(wire).empty()) return false;
  }
  return true;
}

/// A^T z over Z and s·z computed clause by clause.
inline bool pref_conditions(const Game& g, const std::vector<BigInt>& z) {
  std::vector<BigInt> col(static_cast<std::size_t>(g.k()) * g.n());
  BigInt parity = 0;
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto& c = g.clauses()[i];
    for (int a = 0; a < g.k(); ++a) col[a * g.n() + c.query[a] - 1] += z[i];
    if (c.sign == -1) parity += z[i];
  }
  for (const BigInt& v : col) {
    if (v != 0) return false;
  }
  return parity % 2 != 0;
}

/// (A theta)_i - s_i is an even integer for every clause.
inline bool merp_conditions(const Game& g, const std::vector<BigRational>& theta) {
  for (const auto& c : g.clauses()) {
    BigRational r = c.sign == -1 ? BigRational(-1) : BigRational(0);
    for (int a = 0; a < g.k(); ++a) r += theta[a * g.n() + c.query[a] - 1];
    if (boost::multiprecision::denominator(r) != 1) return false;
    if (boost::multiprecision::numerator(r) % 2 != 0) return false;
  }
  return true;
}

}  // namespace oracle
