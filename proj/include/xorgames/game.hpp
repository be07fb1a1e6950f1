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

// Exact representation of k-player XOR games.
//
// A game is an ordered list of clauses. Each clause sends one question in
// [1, n] to each of the k players and carries a target parity s in {+1, -1}.
// Clause order is significant: clause indices (1-based) are what refutation
// certificates refer to.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"

namespace xorgames {

struct Clause {
  std::vector<int> query;  // one question per player, each in [1, n]
  int sign = 1;            // +1 or -1

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

class Game {
 public:
  Game() = default;

  /// Validates every clause against (k, n); throws InvalidParameter otherwise.
  Game(int k, int n, std::vector<Clause> clauses)
      : k_(k), n_(n), clauses_(std::move(clauses)) {
    if (k_ < 1) throw InvalidParameter("game needs k >= 1");
    if (n_ < 1) throw InvalidParameter("game needs n >= 1");
    if (clauses_.empty()) throw InvalidParameter("game needs at least one clause");
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      const Clause& c = clauses_[i];
      if (static_cast<int>(c.query.size()) != k_) {
        throw InvalidParameter("clause " + std::to_string(i + 1) + " has " +
                               std::to_string(c.query.size()) + " questions, expected " +
                               std::to_string(k_));
      }
      for (int q : c.query) {
        if (q < 1 || q > n_) {
          throw InvalidParameter("clause " + std::to_string(i + 1) + " has question " +
                                 std::to_string(q) + " outside [1, " + std::to_string(n_) +
                                 "]");
        }
      }
      if (c.sign != 1 && c.sign != -1) {
        throw InvalidParameter("clause " + std::to_string(i + 1) + " has sign " +
                               std::to_string(c.sign));
      }
    }
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return clauses_.size(); }

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// 1-based clause access, matching the certificate convention.
  const Clause& clause(std::size_t index) const {
    if (index < 1 || index > clauses_.size()) {
      throw InvalidParameter("clause index " + std::to_string(index) + " outside [1, " +
                             std::to_string(clauses_.size()) + "]");
    }
    return clauses_[index - 1];
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<Clause> clauses_;
};

/// m x (k*n) incidence matrix over {0,1}. Entry (i, (a-1)*n + j - 1) is one
/// iff clause i sends question j to player a (0-based storage).
struct GameMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> entries;  // row-major

  std::uint8_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  friend bool operator==(const GameMatrix&, const GameMatrix&) = default;
};

/// ŝ_i = 0 iff s_i = +1.
using ParityBits = std::vector<std::uint8_t>;

/// Column of the game matrix for (player, question), both 1-based.
inline std::size_t matrix_column(int n, int player, int question) {
  return static_cast<std::size_t>(player - 1) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(question - 1);
}

inline std::pair<GameMatrix, ParityBits> game_matrix(const Game& game) {
  GameMatrix a;
  a.rows = game.m();
  a.cols = static_cast<std::size_t>(game.k()) * static_cast<std::size_t>(game.n());
  a.entries.assign(a.rows * a.cols, 0);
  ParityBits s(game.m(), 0);
  for (std::size_t i = 0; i < game.m(); ++i) {
    const Clause& c = game.clauses()[i];
    for (int alpha = 1; alpha <= game.k(); ++alpha) {
      a.entries[i * a.cols + matrix_column(game.n(), alpha, c.query[alpha - 1])] = 1;
    }
    s[i] = c.sign == -1 ? 1 : 0;
  }
  return {std::move(a), std::move(s)};
}

/// Inverse of game_matrix. Each row must have exactly one 1 per column block.
inline Game game_from_matrix(int k, int n, const GameMatrix& a, const ParityBits& s) {
  if (a.cols != static_cast<std::size_t>(k) * static_cast<std::size_t>(n) ||
      s.size() != a.rows) {
    throw DimensionMismatch("game matrix shape does not match (k, n, m)");
  }
  std::vector<Clause> clauses(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    clauses[i].query.assign(k, 0);
    for (int alpha = 1; alpha <= k; ++alpha) {
      int found = 0;
      for (int j = 1; j <= n; ++j) {
        if (a.at(i, matrix_column(n, alpha, j))) {
          if (found) throw InvalidParameter("row has two ones in one column block");
          found = j;
        }
      }
      if (!found) throw InvalidParameter("row has an empty column block");
      clauses[i].query[alpha - 1] = found;
    }
    clauses[i].sign = s[i] ? -1 : 1;
  }
  return Game(k, n, std::move(clauses));
}

// ---------------------------------------------------------------------------
// Symmetrization

namespace detail {

inline void append_orbit(const Clause& c, std::set<Clause>& seen, std::vector<Clause>& out) {
  std::vector<int> perm(c.query.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Clause p{std::vector<int>(c.query.size()), c.sign};
    for (std::size_t a = 0; a < perm.size(); ++a) p.query[a] = c.query[perm[a]];
    if (seen.insert(p).second) out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// Closes the clause list under query permutations (sign unchanged). The
/// original clauses come first in their order with exact duplicates dropped;
/// missing permutations follow.
inline Game symmetrize(const Game& game) {
  std::set<Clause> seen;
  std::vector<Clause> out;
  for (const Clause& c : game.clauses()) {
    if (seen.insert(c).second) out.push_back(c);
  }
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base; ++i) {
    Clause c = out[i];
    detail::append_orbit(c, seen, out);
  }
  return Game(game.k(), game.n(), std::move(out));
}

inline bool is_symmetric(const Game& game) {
  std::set<Clause> present(game.clauses().begin(), game.clauses().end());
  for (const Clause& c : game.clauses()) {
    std::vector<int> perm(c.query.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Clause p{std::vector<int>(c.query.size()), c.sign};
      for (std::size_t a = 0; a < perm.size(); ++a) p.query[a] = c.query[perm[a]];
      if (!present.contains(p)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random games

/// m clauses drawn i.i.d. uniformly from [n]^k x {-1, +1}.
inline Game random_game(int k, int n, std::size_t m, std::uint64_t seed) {
  if (k < 1 || n < 1 || m < 1) throw InvalidParameter("random_game needs k, n, m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> question(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Clause> clauses(m);
  for (Clause& c : clauses) {
    c.query.resize(k);
    for (int& q : c.query) q = question(rng);
    c.sign = coin(rng) ? -1 : 1;
  }
  return Game(k, n, std::move(clauses));
}

/// base_clauses random clauses, then closed under all k! query permutations.
inline Game random_symmetric_game(int k, int n, std::size_t base_clauses, std::uint64_t seed) {
  return symmetrize(random_game(k, n, base_clauses, seed));
}

}  // namespace xorgames
