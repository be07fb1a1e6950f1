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

// Constructive refutations for symmetric games with a PREF.
//
// Pipeline: interleave the PREF multisets into a word, reorder it so wires 1
// and 2 cancel with wire 2 of the form x1 x1 x2 x2 ..., then for every later
// wire find a pair permutation that cancels it, split that permutation into
// shuffles, and realize each shuffle with save/load shift gadgets that park
// pairs on wires 1 and 2.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"
#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"
#include "xorgames/word.hpp"

namespace xorgames {

/// Permutation of pairs: order[new_position] = old_position (0-based).
struct PairPermutation {
  std::vector<std::size_t> order;

  /// Same permutation on letter positions: unpacked[q] = old letter position.
  std::vector<std::size_t> unpacked() const {
    std::vector<std::size_t> out;
    out.reserve(2 * order.size());
    for (std::size_t p : order) {
      out.push_back(2 * p);
      out.push_back(2 * p + 1);
    }
    return out;
  }
};

/// Permutation new[p] = old[order[p]] with a witness split of the source
/// positions into two sets on which order is increasing.
struct ShuffleFunction {
  std::vector<std::size_t> order;
  std::vector<bool> in_a;  // indexed by source position

  bool is_valid() const {
    if (in_a.size() != order.size()) return false;
    std::vector<bool> hit(order.size(), false);
    std::size_t last_a = 0, last_b = 0;
    bool seen_a = false, seen_b = false;
    for (std::size_t src : order) {
      if (src >= order.size() || hit[src]) return false;
      hit[src] = true;
      if (in_a[src]) {
        if (seen_a && src < last_a) return false;
        last_a = src;
        seen_a = true;
      } else {
        if (seen_b && src < last_b) return false;
        last_b = src;
        seen_b = true;
      }
    }
    return true;
  }
};

struct GadgetAnnotation {
  std::string type;  // "save" or "load"
  int source_wire = 0;
  int target_wire = 0;
  int first_letter = 0;
  int second_letter = 0;
  std::size_t stage = 0;
  std::size_t offset = 0;  // position of the gadget's first index in the sequence
};

struct GadgetSeq {
  std::vector<std::size_t> indices;
  std::vector<GadgetAnnotation> annotations;
};

struct RefutationCertificate {
  std::string game;  // family name or content hash
  std::vector<std::size_t> indices;
  std::vector<GadgetAnnotation> annotations;
};

/// Locates clauses by (query, sign).
class ClauseIndex {
 public:
  explicit ClauseIndex(const Game& game) {
    for (std::size_t i = 0; i < game.m(); ++i) index_.emplace(game.clauses()[i], i + 1);
  }

  std::size_t find(const Clause& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) {
      std::string q;
      for (int x : c.query) q += (q.empty() ? "" : ",") + std::to_string(x);
      throw PreconditionError("game lacks clause (" + q + ") with sign " +
                              std::to_string(c.sign));
    }
    return it->second;
  }

 private:
  std::map<Clause, std::size_t> index_;
};

inline std::vector<std::size_t> build_word_from_pref(const Game& game, const IntVector& z) {
  if (!verify_pref(game, z)) throw PreconditionError("vector is not a PREF specification");
  std::vector<std::size_t> odd, even;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const BigInt count = boost::multiprecision::abs(z[i]);
    if (count > 100000000) throw GuardExceeded("PREF multiplicity too large to expand");
    auto& dst = z[i] > 0 ? odd : even;
    for (long long c = 0; c < count.convert_to<long long>(); ++c) dst.push_back(i + 1);
  }
  if (odd.size() != even.size()) throw std::logic_error("PREF multisets differ in size");
  std::vector<std::size_t> out;
  out.reserve(2 * odd.size());
  for (std::size_t t = 0; t < odd.size(); ++t) {
    out.push_back(odd[t]);
    out.push_back(even[t]);
  }
  return out;
}

namespace detail {

/// For each pair i, the first unused pair j whose first letter equals pair i's
/// second letter.
inline std::vector<std::size_t> greedy_pair_matching(const std::vector<int>& wire) {
  const std::size_t pairs = wire.size() / 2;
  std::map<int, std::vector<std::size_t>> firsts;  // letter -> pairs, ascending
  for (std::size_t j = 0; j < pairs; ++j) firsts[wire[2 * j]].push_back(j);
  std::map<int, std::size_t> cursor;
  std::vector<std::size_t> f(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const int letter = wire[2 * i + 1];
    auto it = firsts.find(letter);
    std::size_t& c = cursor[letter];
    if (it == firsts.end() || c >= it->second.size()) {
      throw std::logic_error("pair matching failed despite balanced counts");
    }
    f[i] = it->second[c++];
  }
  return f;
}

}  // namespace detail

inline PairPermutation pair_canceling_permutation(const std::vector<int>& wire) {
  if (wire.size() % 2 != 0) throw PreconditionError("wire length must be even");
  std::map<int, long long> balance;
  for (std::size_t p = 0; p < wire.size(); ++p) balance[wire[p]] += p % 2 == 0 ? 1 : -1;
  for (const auto& [letter, b] : balance) {
    if (b != 0) {
      throw PreconditionError("letter " + std::to_string(letter) +
                              " is unbalanced between even and odd positions");
    }
  }
  const std::vector<std::size_t> f = detail::greedy_pair_matching(wire);
  PairPermutation out;
  std::vector<bool> used(f.size(), false);
  for (std::size_t start = 0; start < f.size(); ++start) {
    for (std::size_t i = start; !used[i]; i = f[i]) {
      used[i] = true;
      out.order.push_back(i);
    }
  }
  return out;
}

/// Reorders a sequence whose word is equivalent to the identity up to
/// per-wire letter counts so that wires 1 and 2 reduce to the empty word and
/// wire 2 reads x1 x1 x2 x2 ...
inline std::vector<std::size_t> cancel_first_two_wires(const Game& game,
                                                       const std::vector<std::size_t>& indices) {
  if (indices.size() % 2 != 0) throw PreconditionError("sequence length must be even");
  const auto [word, sign] = word_from_indices(game, indices);
  (void)sign;
  if (game.k() == 1) {
    const PairPermutation pi = pair_canceling_permutation(word.wires[0]);
    std::vector<std::size_t> out;
    for (std::size_t p : pi.unpacked()) out.push_back(indices[p]);
    return out;
  }

  // Positions 0, 2, 4, ... form O; 1, 3, 5, ... form E.
  const std::size_t half = indices.size() / 2;
  auto match = [&](int wire) {
    std::map<int, std::vector<std::size_t>> odd_by_letter;
    for (std::size_t t = 0; t < half; ++t) odd_by_letter[word.wires[wire][2 * t]].push_back(t);
    std::map<int, std::size_t> cursor;
    std::vector<std::size_t> f(half);
    for (std::size_t e = 0; e < half; ++e) {
      const int letter = word.wires[wire][2 * e + 1];
      auto it = odd_by_letter.find(letter);
      std::size_t& c = cursor[letter];
      if (it == odd_by_letter.end() || c >= it->second.size()) {
        throw PreconditionError("wire " + std::to_string(wire + 1) +
                                " letters are unbalanced between O and E");
      }
      f[e] = it->second[c++];
    }
    return f;
  };
  const std::vector<std::size_t> f1 = match(0);
  const std::vector<std::size_t> f2 = match(1);
  std::vector<std::size_t> f1_inverse(half);
  for (std::size_t e = 0; e < half; ++e) f1_inverse[f1[e]] = e;

  std::vector<std::size_t> out;
  out.reserve(indices.size());
  std::vector<bool> used(half, false);
  for (std::size_t start = 0; start < half; ++start) {
    for (std::size_t e = start; !used[e]; e = f1_inverse[f2[e]]) {
      used[e] = true;
      out.push_back(indices[2 * e + 1]);
      out.push_back(indices[2 * f2[e]]);
    }
  }
  return out;
}

/// Splits a permutation (order[new] = old) into shuffles whose sequential
/// application reproduces it. Each factor is one stable partition on a bit of
/// the target rank, least significant bit first.
inline std::vector<ShuffleFunction> shuffle_decompose(const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> rank(n);
  {
    std::vector<bool> hit(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      if (order[p] >= n || hit[order[p]]) throw InvalidParameter("not a permutation");
      hit[order[p]] = true;
      rank[order[p]] = p;
    }
  }
  std::vector<ShuffleFunction> factors;
  if (std::is_sorted(order.begin(), order.end())) return factors;
  std::vector<std::size_t> current(n);  // current[pos] = original element
  for (std::size_t p = 0; p < n; ++p) current[p] = p;
  for (std::size_t bit = 0; (std::size_t{1} << bit) < n; ++bit) {
    ShuffleFunction f;
    f.in_a.resize(n);
    std::vector<std::size_t> high;
    for (std::size_t p = 0; p < n; ++p) {
      const bool low = ((rank[current[p]] >> bit) & 1u) == 0;
      f.in_a[p] = low;
      if (low) {
        f.order.push_back(p);
      } else {
        high.push_back(p);
      }
    }
    f.order.insert(f.order.end(), high.begin(), high.end());
    bool identity = true;
    for (std::size_t p = 0; p < n; ++p) identity = identity && f.order[p] == p;
    if (identity) continue;
    std::vector<std::size_t> next(n);
    for (std::size_t p = 0; p < n; ++p) next[p] = current[f.order[p]];
    current = std::move(next);
    factors.push_back(std::move(f));
  }
  return factors;
}

inline std::vector<std::size_t> compose_shuffles(std::size_t n,
                                                 const std::vector<ShuffleFunction>& factors) {
  std::vector<std::size_t> current(n);
  for (std::size_t p = 0; p < n; ++p) current[p] = p;
  for (const ShuffleFunction& f : factors) {
    std::vector<std::size_t> next(n);
    for (std::size_t p = 0; p < n; ++p) next[p] = current[f.order[p]];
    current = std::move(next);
  }
  return current;
}

namespace detail {

inline Clause swap_wires(const Clause& c, int a, int b) {
  Clause out = c;
  std::swap(out.query[a - 1], out.query[b - 1]);
  return out;
}

}  // namespace detail

/// Four clauses moving the pair (left^α, right^α) off wire α onto `target`
/// (1 or 2). The word reduces to right^α left^α on wire α and to
/// right^(2) right^α left^α left^(2) on the target wire, empty elsewhere.
inline GadgetSeq shift_gadget_symmetric(const Game& game, const ClauseIndex& lookup,
                                        std::size_t left, std::size_t right, int alpha,
                                        int target) {
  if (game.k() < 3 || alpha < 3 || alpha > game.k()) {
    throw InvalidParameter("shift gadget source wire must lie in [3, k]");
  }
  if (target != 1 && target != 2) throw InvalidParameter("shift gadget target must be 1 or 2");
  Clause q1 = game.clause(left);
  Clause q2 = game.clause(right);
  if (q1.query[1] != q2.query[1]) {
    throw PreconditionError("shift gadget clauses disagree on wire 2");
  }
  if (target == 1) {
    q1 = detail::swap_wires(q1, 1, 2);
    q2 = detail::swap_wires(q2, 1, 2);
  }
  GadgetSeq g;
  g.indices = {lookup.find(q2), lookup.find(detail::swap_wires(q2, target, alpha)),
               lookup.find(detail::swap_wires(q1, target, alpha)), lookup.find(q1)};
  g.annotations.push_back({"save", alpha, target, game.clause(left).query[alpha - 1],
                           game.clause(right).query[alpha - 1], 0, 0});
  return g;
}

inline GadgetSeq shift_gadget_symmetric(const Game& game, std::size_t left, std::size_t right,
                                        int alpha, int target) {
  return shift_gadget_symmetric(game, ClauseIndex(game), left, right, alpha, target);
}

/// Saves every pair (right to left) onto wire 1 or 2 according to the witness
/// split, then loads them back in the shuffled order. Pairs with equal letters
/// on wire α are skipped: they are already trivial there.
inline GadgetSeq shuffle_gadget(const Game& game, const ClauseIndex& lookup,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                const ShuffleFunction& f, int alpha, std::size_t stage = 0) {
  if (f.order.size() != pairs.size() || !f.is_valid()) {
    throw PreconditionError("shuffle function does not match the pair list");
  }
  GadgetSeq out;
  auto emit = [&](std::size_t src, bool load) {
    const auto [left, right] = pairs[src];
    if (game.clause(left).query[alpha - 1] == game.clause(right).query[alpha - 1]) return;
    GadgetSeq g = shift_gadget_symmetric(game, lookup, left, right, alpha, f.in_a[src] ? 1 : 2);
    if (load) std::reverse(g.indices.begin(), g.indices.end());
    GadgetAnnotation note = g.annotations.front();
    note.type = load ? "load" : "save";
    note.stage = stage;
    note.offset = out.indices.size();
    out.annotations.push_back(note);
    out.indices.insert(out.indices.end(), g.indices.begin(), g.indices.end());
  };
  for (std::size_t p = pairs.size(); p-- > 0;) emit(p, false);
  for (std::size_t p = 0; p < pairs.size(); ++p) emit(f.order[p], true);
  return out;
}

inline GadgetSeq shuffle_gadget(const Game& game,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                const ShuffleFunction& f, int alpha) {
  return shuffle_gadget(game, ClauseIndex(game), pairs, f, alpha);
}

inline RefutationCertificate build_refutation_symmetric(const Game& game, const IntVector& z,
                                                        const std::string& name = {}) {
  if (!is_symmetric(game)) throw PreconditionError("refutation builder needs a symmetric game");
  if (!verify_pref(game, z)) throw PreconditionError("vector is not a PREF specification");

  RefutationCertificate cert;
  cert.game = name;
  cert.indices = cancel_first_two_wires(game, build_word_from_pref(game, z));

  std::vector<std::pair<std::size_t, std::size_t>> base_pairs;
  for (std::size_t p = 0; p + 1 < cert.indices.size(); p += 2) {
    base_pairs.emplace_back(cert.indices[p], cert.indices[p + 1]);
  }
  const ClauseIndex lookup(game);
  std::size_t stage = 0;
  for (int alpha = 3; alpha <= game.k(); ++alpha) {
    // Earlier gadgets are trivial on this wire, so it still carries the
    // pairs in their original order.
    std::vector<int> wire;
    for (const auto& [l, r] : base_pairs) {
      wire.push_back(game.clause(l).query[alpha - 1]);
      wire.push_back(game.clause(r).query[alpha - 1]);
    }
    const PairPermutation pi = pair_canceling_permutation(wire);
    auto pairs = base_pairs;
    for (const ShuffleFunction& f : shuffle_decompose(pi.order)) {
      GadgetSeq g = shuffle_gadget(game, lookup, pairs, f, alpha, ++stage);
      for (GadgetAnnotation& a : g.annotations) a.offset += cert.indices.size();
      cert.indices.insert(cert.indices.end(), g.indices.begin(), g.indices.end());
      cert.annotations.insert(cert.annotations.end(), g.annotations.begin(), g.annotations.end());
      std::vector<std::pair<std::size_t, std::size_t>> next(pairs.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) next[p] = pairs[f.order[p]];
      pairs = std::move(next);
    }
  }
  if (!is_refutation(game, cert.indices)) {
    throw std::logic_error("refutation builder produced a sequence that does not verify");
  }
  return cert;
}

inline double value_upper_bound_from_refutation(std::size_t m, std::size_t length) {
  if (m < 1 || length < 1) throw InvalidParameter("bound needs m, length >= 1");
  const double md = static_cast<double>(m);
  const double l = static_cast<double>(length);
  return 1.0 - std::numbers::pi * std::numbers::pi / (4.0 * md * l * l);
}

}  // namespace xorgames
