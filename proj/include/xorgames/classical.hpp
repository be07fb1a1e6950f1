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

// Classical (unentangled) analysis of XOR games over F2.
//
// A deterministic strategy is a vector η̂ in F2^{kn}; it satisfies clause i
// iff (A η̂)_i = ŝ_i. The outputs reachable by any strategy are exactly the
// column space cY2 of A, which has 2^σ2 elements (σ2 = rank A). Exact values
// are therefore computed by enumerating cY2, not the 2^{kn} strategies.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"
#include "xorgames/f2.hpp"
#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"

namespace xorgames {

inline constexpr std::size_t kMaxSigma2Enumeration = 24;
inline constexpr std::size_t kMaxCosetEnumeration = 24;

struct ClassicalStrategy {
  F2Vector answers;  // entry (a-1)*n + j-1 is player a's answer bit on question j
};

struct ClassicalRefutation {
  F2Vector y;  // A^T y = 0 and ŝ·y = 1
};

inline F2Matrix to_f2(const GameMatrix& a) {
  F2Matrix m(a.rows, a.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (a.at(r, c)) m.set(r, c, true);
    }
  }
  return m;
}

inline std::optional<ClassicalStrategy> classical_value1(const Game& game) {
  auto [a, s] = game_matrix(game);
  auto x = f2_solve(to_f2(a), F2Vector::from_bits(s));
  if (!x) return std::nullopt;
  return ClassicalStrategy{std::move(*x)};
}

inline std::optional<ClassicalRefutation> classical_refutation(const Game& game) {
  auto [a, s] = game_matrix(game);
  // [A^T; ŝ^T] y = [0; 1]
  F2Matrix system(a.cols + 1, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (a.at(i, c)) system.set(c, i, true);
    }
    if (s[i]) system.set(a.cols, i, true);
  }
  F2Vector rhs(a.cols + 1);
  rhs.set(a.cols, true);
  auto y = f2_solve(system, rhs);
  if (!y) return std::nullopt;
  return ClassicalRefutation{std::move(*y)};
}

/// Checks a classical refutation by direct arithmetic against the clause list.
inline bool verify_classical_refutation(const Game& game, const F2Vector& y) {
  if (y.size() != game.m()) return false;
  std::vector<int> parity(static_cast<std::size_t>(game.k()) * game.n(), 0);
  int sign_parity = 0;
  for (std::size_t i = 0; i < game.m(); ++i) {
    if (!y.get(i)) continue;
    const Clause& c = game.clauses()[i];
    for (int a = 1; a <= game.k(); ++a) parity[matrix_column(game.n(), a, c.query[a - 1])] ^= 1;
    if (c.sign == -1) sign_parity ^= 1;
  }
  for (int p : parity) {
    if (p) return false;
  }
  return sign_parity == 1;
}

/// Fraction of clauses won by a deterministic strategy.
inline BigRational classical_strategy_value(const Game& game, const ClassicalStrategy& strategy) {
  const std::size_t width = static_cast<std::size_t>(game.k()) * game.n();
  if (strategy.answers.size() != width) {
    throw DimensionMismatch("strategy length " + std::to_string(strategy.answers.size()) +
                            " differs from k*n = " + std::to_string(width));
  }
  std::size_t won = 0;
  for (const Clause& c : game.clauses()) {
    bool parity = false;
    for (int a = 1; a <= game.k(); ++a) {
      parity ^= strategy.answers.get(matrix_column(game.n(), a, c.query[a - 1]));
    }
    if (parity == (c.sign == -1)) ++won;
  }
  return BigRational(BigInt(won), BigInt(game.m()));
}

inline std::size_t sigma2(const GameMatrix& a) { return f2_rank(to_f2(a)); }
inline std::size_t sigma2(const Game& game) { return sigma2(game_matrix(game).first); }

/// ω(G) = max over y in cY2 of agreement(y, ŝ) / m. Throws GuardExceeded
/// when σ2 exceeds kMaxSigma2Enumeration.
inline BigRational classical_value_exact(const Game& game) {
  auto [a, s] = game_matrix(game);
  F2Echelon space = f2_column_space(to_f2(a));
  const std::size_t dim = space.rank();
  if (dim > kMaxSigma2Enumeration) {
    throw GuardExceeded("classical_value_exact: sigma2 = " + std::to_string(dim) +
                        " exceeds the enumeration guard of " +
                        std::to_string(kMaxSigma2Enumeration));
  }
  const F2Vector target = F2Vector::from_bits(s);
  F2Vector y(game.m());
  std::size_t best = game.m() - (y ^ target).popcount();
  // Gray-code walk over all 2^dim elements of cY2.
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(g));
    y ^= space.reduced.row(bit);
    const std::size_t agree = game.m() - (y ^ target).popcount();
    if (agree > best) best = agree;
  }
  return BigRational(BigInt(best), BigInt(game.m()));
}

struct AdversarialSigns {
  ParityBits signs;
  BigRational value;
  std::size_t distance = 0;  // Hamming distance from ŝ to cY2
};

/// Parity vector at maximum Hamming distance from cY2 (lexicographically
/// smallest among maximizers), with the exact classical value it induces.
/// Works on the 2^{m-σ2} cosets of cY2; guarded by kMaxCosetEnumeration.
inline AdversarialSigns adversarial_signs(const GameMatrix& a) {
  const std::size_t m = a.rows;
  F2Echelon space = f2_column_space(to_f2(a));
  const std::size_t dim = space.rank();
  const std::size_t free_count = m - dim;
  if (free_count > kMaxCosetEnumeration) {
    throw GuardExceeded("adversarial_signs: m - sigma2 = " + std::to_string(free_count) +
                        " (2^" + std::to_string(free_count) +
                        " cosets) exceeds the guard of " + std::to_string(kMaxCosetEnumeration));
  }

  // Coset representatives vanish on pivot positions; the remaining (free)
  // positions index them, earliest position as the most significant bit, so
  // integer order on indices matches lexicographic order on vectors.
  std::vector<bool> is_pivot(m, false);
  for (std::size_t p : space.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_positions;
  std::vector<std::int64_t> free_slot(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_pivot[i]) {
      free_slot[i] = static_cast<std::int64_t>(free_positions.size());
      free_positions.push_back(i);
    }
  }
  auto index_bit = [&](std::size_t slot) {
    return std::uint64_t{1} << (free_count - 1 - slot);
  };
  auto representative_index = [&](const F2Vector& v) {
    std::uint64_t idx = 0;
    for (std::size_t slot = 0; slot < free_count; ++slot) {
      if (v.get(free_positions[slot])) idx |= index_bit(slot);
    }
    return idx;
  };

  // Syndrome of each unit vector e_i.
  std::vector<std::uint64_t> generator(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (free_slot[i] >= 0) {
      generator[i] = index_bit(static_cast<std::size_t>(free_slot[i]));
    } else {
      for (std::size_t r = 0; r < dim; ++r) {
        if (space.pivots[r] == i) generator[i] = representative_index(space.reduced.row(r));
      }
    }
  }

  // BFS over the coset space: distance = coset minimum weight.
  const std::uint64_t states = std::uint64_t{1} << free_count;
  constexpr std::uint8_t kUnseen = 0xff;
  std::vector<std::uint8_t> dist(states, kUnseen);
  std::vector<std::uint64_t> frontier{0};
  dist[0] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t v : frontier) {
      for (std::uint64_t g : generator) {
        const std::uint64_t w = v ^ g;
        if (dist[w] == kUnseen) {
          dist[w] = static_cast<std::uint8_t>(level + 1);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }

  std::uint64_t best_index = 0;
  std::uint8_t best_dist = 0;
  for (std::uint64_t idx = 0; idx < states; ++idx) {
    if (dist[idx] != kUnseen && dist[idx] > best_dist) {
      best_dist = dist[idx];
      best_index = idx;
    }
  }

  AdversarialSigns out;
  out.signs.assign(m, 0);
  for (std::size_t slot = 0; slot < free_count; ++slot) {
    if (best_index & index_bit(slot)) out.signs[free_positions[slot]] = 1;
  }
  out.distance = best_dist;
  out.value = BigRational(BigInt(m - best_dist), BigInt(m));
  return out;
}

/// 1/2 + sqrt(σ2 / 2m): an upper bound on the adversarial value for this game
/// matrix, reported for comparison only.
inline double existence_bound(const Game& game) {
  const double s2 = static_cast<double>(sigma2(game));
  return 0.5 + std::sqrt(s2 / (2.0 * static_cast<double>(game.m())));
}

}  // namespace xorgames
