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

// PREF detection, MERP synthesis and the PREF/MERP alternative.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "xorgames/error.hpp"
#include "xorgames/f2.hpp"
#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"

namespace xorgames {

/// Integer z with A^T z = 0 and ŝ·z odd.
struct PrefSpecification {
  IntVector z;
};

/// θ̂ in Q^{kn}; player a answers question j with angle π·θ̂[(a-1)n + j - 1].
struct MerpStrategy {
  RationalVector theta;
};

/// Algebraic check of both PREF conditions.
inline bool is_valid_pref(const Game& game, const IntVector& z) {
  if (z.size() != game.m()) throw DimensionMismatch("PREF vector length differs from m");
  const auto [a, s] = game_matrix(game);
  const IntMatrix at = IntMatrix::from_game_matrix(a).transpose();
  for (const BigInt& v : at.multiply(z)) {
    if (!v.is_zero()) return false;
  }
  BigInt parity = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (s[i]) parity += z[i];
  }
  return boost::multiprecision::abs(parity) % 2 == 1;
}

inline std::optional<PrefSpecification> find_pref(const Game& game) {
  const auto [a, s] = game_matrix(game);
  const IntMatrix at = IntMatrix::from_game_matrix(a).transpose();
  for (IntVector& b : integer_kernel_basis(at)) {
    BigInt parity = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (s[i]) parity += b[i];
    }
    if (boost::multiprecision::abs(parity) % 2 == 1) return PrefSpecification{std::move(b)};
  }
  return std::nullopt;
}

/// Clause multisets of a PREF, as 1-based indices repeated by multiplicity:
/// O from positive entries, E from negative ones.
struct PrefMultisets {
  std::vector<std::size_t> odd;
  std::vector<std::size_t> even;
};

inline PrefMultisets pref_to_multisets(const Game& game, const IntVector& z) {
  if (!is_valid_pref(game, z)) throw PreconditionError("vector is not a PREF specification");
  PrefMultisets out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto& dst = z[i] > 0 ? out.odd : out.even;
    const BigInt count = boost::multiprecision::abs(z[i]);
    if (count > 100000000) throw GuardExceeded("PREF multiplicity too large to expand");
    for (long long c = 0; c < count.convert_to<long long>(); ++c) dst.push_back(i + 1);
  }
  return out;
}

inline std::optional<MerpStrategy> find_merp(const Game& game) {
  const auto [a, s] = game_matrix(game);
  const std::size_t m = a.rows;
  const IntMatrix am = IntMatrix::from_game_matrix(a);

  // Lattice basis of im_Q(A) ∩ Z^m: the integer kernel of the kernel of A^T.
  const std::vector<IntVector> left = integer_kernel_basis(am.transpose());
  std::vector<IntVector> lattice;
  if (left.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      IntVector e(m);
      e[i] = 1;
      lattice.push_back(std::move(e));
    }
  } else {
    lattice = integer_kernel_basis(IntMatrix::from_vectors(left, m));
  }

  F2Matrix mod2(m, lattice.size());
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      if (boost::multiprecision::abs(lattice[c][r]) % 2 == 1) mod2.set(r, c, true);
    }
  }
  const auto coeffs = f2_solve(mod2, F2Vector::from_bits(s));
  if (!coeffs) return std::nullopt;

  IntVector y(m);
  for (std::size_t c = 0; c < lattice.size(); ++c) {
    if (!coeffs->get(c)) continue;
    for (std::size_t r = 0; r < m; ++r) y[r] += lattice[c][r];
  }
  auto theta = rational_solve(am, y);
  if (!theta) throw std::logic_error("find_merp: lattice vector outside the column space");
  return MerpStrategy{std::move(*theta)};
}

struct MerpValue {
  bool exact_value_1 = false;
  double value = 0.0;
};

inline MerpValue merp_value(const Game& game, const MerpStrategy& strategy) {
  const auto [a, s] = game_matrix(game);
  if (strategy.theta.size() != a.cols) {
    throw DimensionMismatch("MERP vector length differs from k*n");
  }
  MerpValue out{true, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) {
    BigRational r = s[i] ? BigRational(-1) : BigRational(0);
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (a.at(i, c)) r += strategy.theta[c];
    }
    // Reduce into [0, 2) exactly before going to floating point.
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / (2 * den);
    if (num < 0 && q * 2 * den != num) q -= 1;
    const BigRational reduced = r - BigRational(2 * q);
    if (!reduced.is_zero()) out.exact_value_1 = false;
    sum += std::cos(std::numbers::pi * reduced.convert_to<double>());
  }
  out.value = 0.5 + sum / (2.0 * static_cast<double>(a.rows));
  return out;
}

using DualityResult = std::variant<PrefSpecification, MerpStrategy>;

/// Exactly one side exists for every game; finding both or neither is a bug.
inline DualityResult duality_check(const Game& game) {
  auto pref = find_pref(game);
  auto merp = find_merp(game);
  if (pref.has_value() == merp.has_value()) {
    throw std::logic_error(pref ? "duality_check: both PREF and MERP found"
                                : "duality_check: neither PREF nor MERP found");
  }
  if (pref) return std::move(*pref);
  return std::move(*merp);
}

/// Value1 carries a MERP strategy; LessThanOne carries a PREF.
struct SymmetricDecision {
  bool value1 = false;
  std::optional<MerpStrategy> merp;
  std::optional<PrefSpecification> pref;
};

inline SymmetricDecision decide_symmetric(const Game& game) {
  if (!is_symmetric(game)) throw PreconditionError("decide_symmetric needs a symmetric game");
  DualityResult r = duality_check(game);
  SymmetricDecision d;
  if (auto* merp = std::get_if<MerpStrategy>(&r)) {
    if (!merp_value(game, *merp).exact_value_1) {
      throw std::logic_error("decide_symmetric: MERP strategy failed its exact check");
    }
    d.value1 = true;
    d.merp = std::move(*merp);
  } else {
    auto& pref = std::get<PrefSpecification>(r);
    if (!is_valid_pref(game, pref.z)) {
      throw std::logic_error("decide_symmetric: PREF failed its algebraic check");
    }
    d.pref = std::move(pref);
  }
  return d;
}

}  // namespace xorgames
