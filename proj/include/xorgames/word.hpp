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

// Words over per-wire alphabets, their normal form, and the independent
// verifiers for refutations and PREF specifications.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"
#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"

namespace xorgames {

/// One letter sequence per player. Letters are questions in [1, n].
struct Word {
  std::vector<std::vector<int>> wires;

  bool is_identity() const {
    return std::all_of(wires.begin(), wires.end(), [](const auto& w) { return w.empty(); });
  }
  std::size_t k() const noexcept { return wires.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

inline std::pair<Word, int> word_from_indices(const Game& game,
                                              const std::vector<std::size_t>& indices) {
  Word w;
  w.wires.resize(game.k());
  int sign = 1;
  for (std::size_t idx : indices) {
    const Clause& c = game.clause(idx);
    for (int a = 0; a < game.k(); ++a) w.wires[a].push_back(c.query[a]);
    sign *= c.sign;
  }
  return {std::move(w), sign};
}

/// Pushes one letter onto an already-reduced wire.
inline void push_reduced(std::vector<int>& wire, int letter) {
  if (!wire.empty() && wire.back() == letter) {
    wire.pop_back();
  } else {
    wire.push_back(letter);
  }
}

inline std::vector<int> reduce_wire(const std::vector<int>& wire) {
  std::vector<int> out;
  out.reserve(wire.size());
  for (int letter : wire) push_reduced(out, letter);
  return out;
}

inline Word reduce(const Word& w) {
  Word out;
  out.wires.reserve(w.wires.size());
  for (const auto& wire : w.wires) out.wires.push_back(reduce_wire(wire));
  return out;
}

inline bool is_refutation(const Game& game, const std::vector<std::size_t>& indices) {
  for (std::size_t idx : indices) game.clause(idx);  // range check
  if (indices.empty() || indices.size() % 2 == 1) return false;
  const auto [w, sign] = word_from_indices(game, indices);
  return sign == -1 && reduce(w).is_identity();
}

/// Counts letters in the O and E multisets of z per (player, question) and
/// checks they agree and that the signs over O and E multiply to -1.
inline bool verify_pref(const Game& game, const IntVector& z) {
  if (z.size() != game.m()) throw DimensionMismatch("PREF vector length differs from m");
  std::map<std::pair<int, int>, BigInt> odd_count;
  std::map<std::pair<int, int>, BigInt> even_count;
  BigInt negatives = 0;
  bool any = false;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    any = true;
    const Clause& c = game.clauses()[i];
    const BigInt mult = boost::multiprecision::abs(z[i]);
    auto& tally = z[i] > 0 ? odd_count : even_count;
    for (int a = 0; a < game.k(); ++a) tally[{a + 1, c.query[a]}] += mult;
    if (c.sign == -1) negatives += mult;
  }
  return any && odd_count == even_count && negatives % 2 == 1;
}

/// Product of the parity bits along the sequence.
inline int pseudo_expectation(const Game& game, const std::vector<std::size_t>& indices) {
  int sign = 1;
  for (std::size_t idx : indices) sign *= game.clause(idx).sign;
  return sign;
}

/// Signed index counts of a sequence: +1 at odd (1-based) positions, -1 at even.
inline IntVector induced_counts(const Game& game, const std::vector<std::size_t>& indices) {
  IntVector z(game.m());
  for (std::size_t p = 0; p < indices.size(); ++p) {
    game.clause(indices[p]);
    z[indices[p] - 1] += p % 2 == 0 ? 1 : -1;
  }
  return z;
}

enum class BfsStatus { kFound, kNotFoundWithinLength, kStateCapExceeded };

struct BfsResult {
  BfsStatus status = BfsStatus::kNotFoundWithinLength;
  std::vector<std::size_t> indices;  // shortest refutation when found
  std::size_t states = 0;
};

inline constexpr std::size_t kDefaultBfsStateCap = 10'000'000;

namespace detail {

inline std::string encode_state(const std::vector<std::vector<int>>& wires, int sign) {
  std::string key;
  key.push_back(sign < 0 ? '-' : '+');
  for (const auto& wire : wires) {
    for (int letter : wire) {
      key.push_back(static_cast<char>(letter & 0xff));
      key.push_back(static_cast<char>((letter >> 8) & 0xff));
      key.push_back(static_cast<char>((letter >> 16) & 0xff));
    }
    key.append(3, '\0');
  }
  return key;
}

}  // namespace detail

/// Breadth-first search over (reduced word, sign) states, appending one
/// clause per step. Exact for the bounds given.
inline BfsResult min_refutation_bfs(const Game& game, std::size_t max_len,
                                    std::size_t state_cap = kDefaultBfsStateCap) {
  struct Node {
    std::vector<std::vector<int>> wires;
    int sign;
    std::size_t parent;
    std::size_t clause;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back({std::vector<std::vector<int>>(game.k()), 1, 0, 0});
  seen.emplace(detail::encode_state(nodes[0].wires, 1), 0);

  BfsResult result;
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = nodes.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (std::size_t ci = 0; ci < game.m(); ++ci) {
        const Clause& c = game.clauses()[ci];
        auto wires = nodes[v].wires;
        for (int a = 0; a < game.k(); ++a) push_reduced(wires[a], c.query[a]);
        const int sign = nodes[v].sign * c.sign;
        const bool identity = std::all_of(wires.begin(), wires.end(),
                                          [](const auto& w) { return w.empty(); });
        if (identity && sign == -1) {
          result.status = BfsStatus::kFound;
          result.indices.push_back(ci + 1);
          for (std::size_t u = v; u != 0; u = nodes[u].parent) {
            result.indices.push_back(nodes[u].clause);
          }
          std::reverse(result.indices.begin(), result.indices.end());
          result.states = nodes.size();
          return result;
        }
        auto key = detail::encode_state(wires, sign);
        if (seen.contains(key)) continue;
        if (nodes.size() >= state_cap) {
          result.status = BfsStatus::kStateCapExceeded;
          result.states = nodes.size();
          return result;
        }
        seen.emplace(std::move(key), nodes.size());
        nodes.push_back({std::move(wires), sign, v, ci + 1});
      }
    }
    level_begin = level_end;
    if (level_begin == nodes.size()) break;  // state space exhausted
  }
  result.states = nodes.size();
  return result;
}

}  // namespace xorgames
