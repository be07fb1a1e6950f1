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

// Named game families: GHZ, Capped GHZ, APD, and the (Small) 123 games.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xorgames/classical.hpp"
#include "xorgames/error.hpp"
#include "xorgames/game.hpp"

namespace xorgames {

/// GHZ with labels x -> 1, y -> 2: (x,x,x,+1), (y,y,x,-1), (y,x,y,-1), (x,y,y,-1).
inline Game ghz() {
  return Game(3, 2, {{{1, 1, 1}, 1}, {{2, 2, 1}, -1}, {{2, 1, 2}, -1}, {{1, 2, 2}, -1}});
}

/// Capped GHZ of order n: lower cap (1,1,1,-1), triples A_1..A_{n-1}, upper
/// cap (n,n,n,+1); m = 3n - 1.
inline Game capped_ghz(int n) {
  if (n < 2) throw InvalidParameter("capped_ghz needs n >= 2, got " + std::to_string(n));
  std::vector<Clause> clauses;
  clauses.push_back({{1, 1, 1}, -1});
  for (int i = 1; i < n; ++i) {
    clauses.push_back({{i, i + 1, i + 1}, 1});
    clauses.push_back({{i + 1, i, i + 1}, 1});
    clauses.push_back({{i + 1, i + 1, i}, 1});
  }
  clauses.push_back({{n, n, n}, 1});
  return Game(3, n, std::move(clauses));
}

inline Game game_123() {
  return Game(6, 3,
              {{{1, 1, 1, 1, 1, 1}, 1},
               {{2, 2, 2, 2, 2, 2}, 1},
               {{3, 3, 3, 3, 3, 3}, -1},
               {{1, 2, 3, 1, 2, 3}, 1},
               {{2, 3, 1, 3, 1, 2}, 1},
               {{3, 1, 2, 2, 3, 1}, 1}});
}

inline Game small_123() {
  return Game(3, 3,
              {{{1, 1, 1}, 1},
               {{1, 2, 3}, 1},
               {{3, 3, 3}, -1},
               {{2, 3, 1}, 1},
               {{2, 2, 2}, 1},
               {{3, 1, 2}, 1}});
}

/// B_(K): 2^K x 2^K over {0,1}, B_(0) = [1],
/// B_(K+1) = [[~B_(K), B_(K)], [B_(K), B_(K)]].
inline std::vector<std::vector<std::uint8_t>> apd_query_matrix(int big_k) {
  if (big_k < 0) throw InvalidParameter("apd_query_matrix needs K >= 0");
  std::vector<std::vector<std::uint8_t>> b{{1}};
  for (int level = 0; level < big_k; ++level) {
    const std::size_t s = b.size();
    std::vector<std::vector<std::uint8_t>> next(2 * s, std::vector<std::uint8_t>(2 * s));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        next[i][j] = b[i][j] ^ 1u;
        next[i][j + s] = b[i][j];
        next[i + s][j] = b[i][j];
        next[i + s][j + s] = b[i][j];
      }
    }
    b = std::move(next);
  }
  return b;
}

enum class ApdSignKind { kAdversarial, kRandom, kAllPlus };

struct ApdSignMode {
  ApdSignKind kind = ApdSignKind::kAdversarial;
  std::uint64_t seed = 0;  // used by kRandom only
};

inline constexpr int kMaxAdversarialApd = 3;

/// APD_K: k = 2^K - 1 players, n = 2, m = 2^K clauses. Clause i sends player
/// a question 1 when B_(K)[i][a] = 1 and question 2 otherwise, so the game
/// matrix interleaves columns of B_(K) and its complement.
inline Game apd(int big_k, ApdSignMode mode = {}) {
  if (big_k < 1) throw InvalidParameter("apd needs K >= 1, got " + std::to_string(big_k));
  if (big_k > 20) throw InvalidParameter("apd: K = " + std::to_string(big_k) + " is too large");
  const auto b = apd_query_matrix(big_k);
  const std::size_t m = b.size();
  const int k = static_cast<int>(m) - 1;
  if (mode.kind == ApdSignKind::kAdversarial && big_k > kMaxAdversarialApd) {
    // σ2 = K + 1, so the coset search would visit 2^{m - K - 1} cosets.
    const std::size_t cosets_log2 = m - static_cast<std::size_t>(big_k) - 1;
    throw GuardExceeded("apd: adversarial signs need a search over 2^" +
                        std::to_string(cosets_log2) + " cosets; allowed only for K <= " +
                        std::to_string(kMaxAdversarialApd));
  }
  std::vector<Clause> clauses(m);
  for (std::size_t i = 0; i < m; ++i) {
    clauses[i].query.resize(k);
    for (int a = 0; a < k; ++a) clauses[i].query[a] = b[i][a] ? 1 : 2;
  }
  switch (mode.kind) {
    case ApdSignKind::kAllPlus:
      break;
    case ApdSignKind::kRandom: {
      std::mt19937_64 rng(mode.seed);
      std::uniform_int_distribution<int> coin(0, 1);
      for (Clause& c : clauses) c.sign = coin(rng) ? -1 : 1;
      break;
    }
    case ApdSignKind::kAdversarial: {
      Game plus(k, 2, clauses);
      const AdversarialSigns adv = adversarial_signs(game_matrix(plus).first);
      for (std::size_t i = 0; i < m; ++i) clauses[i].sign = adv.signs[i] ? -1 : 1;
      break;
    }
  }
  return Game(k, 2, std::move(clauses));
}

/// Resolves a family name: "ghz", "cg<n>", "capped_ghz<n>", "apd<K>"
/// (adversarial signs), "123", "game123", "small123". Returns nullopt for
/// names that are not families.
inline std::optional<Game> family_by_name(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
      return std::nullopt;
    }
    const std::string tail = name.substr(prefix.size());
    for (char ch : tail) {
      if (ch < '0' || ch > '9') return std::nullopt;
    }
    if (tail.size() > 6) return std::nullopt;
    return std::stoi(tail);
  };
  if (name == "ghz") return ghz();
  if (name == "123" || name == "game123") return game_123();
  if (name == "small123") return small_123();
  if (auto n = suffix_int("capped_ghz")) return capped_ghz(*n);
  if (auto n = suffix_int("cg")) return capped_ghz(*n);
  if (auto k = suffix_int("apd")) return apd(*k);
  return std::nullopt;
}

}  // namespace xorgames
