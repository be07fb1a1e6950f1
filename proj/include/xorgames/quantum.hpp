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

// State-vector checks for tensor-product strategies. Observables act on the
// amplitude vector one qubit at a time; no 2^k x 2^k matrices are built.
// Player a owns qubit a, stored at bit (k - a) of the basis index, so the
// leftmost character of a basis string is player 1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"
#include "xorgames/families.hpp"
#include "xorgames/game.hpp"
#include "xorgames/integer.hpp"
#include "xorgames/pref_merp.hpp"

namespace xorgames {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 20;
inline constexpr double kEigenTolerance = 1e-12;

struct PureState {
  int k = 0;
  std::vector<Amplitude> amplitudes;

  double norm() const {
    double s = 0.0;
    for (const Amplitude& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }
};

inline PureState zero_state(int k) {
  if (k < 1 || k > kMaxQubits) {
    throw InvalidParameter("qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
  }
  PureState s;
  s.k = k;
  s.amplitudes.assign(std::size_t{1} << k, Amplitude{0.0, 0.0});
  return s;
}

/// (|0...0> + |1...1>) / sqrt(2).
inline PureState merp_state(int k) {
  PureState s = zero_state(k);
  const double h = 1.0 / std::numbers::sqrt2;
  s.amplitudes.front() = h;
  s.amplitudes.back() = h;
  return s;
}

/// Pauli X, Y, Z, or the rotated observable |0> -> e^{iθ}|1>, |1> -> e^{-iθ}|0>
/// with θ = π·turns.
struct Observable {
  enum class Kind { kX, kY, kZ, kRotation };
  Kind kind = Kind::kX;
  BigRational turns = 0;

  static Observable x() { return {Kind::kX, 0}; }
  static Observable y() { return {Kind::kY, 0}; }
  static Observable z() { return {Kind::kZ, 0}; }
  static Observable rotation(BigRational t) { return {Kind::kRotation, std::move(t)}; }

  double angle() const { return std::numbers::pi * turns.convert_to<double>(); }
};

/// Observable per (player, question), both 1-based.
class ObservableAssignment {
 public:
  void set(int player, int question, Observable o) { ops_[{player, question}] = std::move(o); }

  const Observable& get(int player, int question) const {
    auto it = ops_.find({player, question});
    if (it == ops_.end()) {
      throw PreconditionError("no observable for player " + std::to_string(player) +
                              ", question " + std::to_string(question));
    }
    return it->second;
  }

  const std::map<std::pair<int, int>, Observable>& entries() const noexcept { return ops_; }

 private:
  std::map<std::pair<int, int>, Observable> ops_;
};

inline void apply_observable(PureState& state, int player, const Observable& o) {
  if (player < 1 || player > state.k) throw InvalidParameter("player outside state");
  const std::size_t mask = std::size_t{1} << (state.k - player);
  auto& v = state.amplitudes;
  switch (o.kind) {
    case Observable::Kind::kZ:
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (b & mask) v[b] = -v[b];
      }
      return;
    case Observable::Kind::kX:
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (!(b & mask)) std::swap(v[b], v[b | mask]);
      }
      return;
    case Observable::Kind::kY:
    case Observable::Kind::kRotation: {
      // new|1> gets up * old|0>, new|0> gets down * old|1>.
      Amplitude up{0.0, 1.0}, down{0.0, -1.0};
      if (o.kind == Observable::Kind::kRotation) {
        up = std::polar(1.0, o.angle());
        down = std::polar(1.0, -o.angle());
      }
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (b & mask) continue;
        const Amplitude a0 = v[b];
        const Amplitude a1 = v[b | mask];
        v[b] = down * a1;
        v[b | mask] = up * a0;
      }
      return;
    }
  }
}

/// Product of the clause's observables applied to the state.
inline PureState apply_clause(const PureState& state, const Game& game, std::size_t clause_index,
                              const ObservableAssignment& assignment) {
  if (state.k != game.k()) throw DimensionMismatch("state qubit count differs from k");
  const Clause& c = game.clause(clause_index);
  PureState out = state;
  for (int a = 1; a <= game.k(); ++a) apply_observable(out, a, assignment.get(a, c.query[a - 1]));
  return out;
}

inline Amplitude inner_product(const PureState& a, const PureState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw DimensionMismatch("state sizes differ");
  Amplitude s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return s;
}

inline double clause_expectation(const PureState& state, const Game& game,
                                 std::size_t clause_index,
                                 const ObservableAssignment& assignment) {
  const Amplitude e = inner_product(state, apply_clause(state, game, clause_index, assignment));
  if (std::abs(e.imag()) > kEigenTolerance) {
    throw std::logic_error("clause expectation has imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

inline double clause_win_probability(const PureState& state, const Game& game,
                                     std::size_t clause_index,
                                     const ObservableAssignment& assignment) {
  const int s = game.clause(clause_index).sign;
  return 0.5 * (1.0 + s * clause_expectation(state, game, clause_index, assignment));
}

inline double simulate_strategy_value(const Game& game, const ObservableAssignment& assignment,
                                      const PureState& state) {
  double total = 0.0;
  for (std::size_t i = 1; i <= game.m(); ++i) {
    total += clause_win_probability(state, game, i, assignment);
  }
  return total / static_cast<double>(game.m());
}

inline ObservableAssignment merp_assignment(const Game& game, const MerpStrategy& strategy) {
  const std::size_t width = static_cast<std::size_t>(game.k()) * game.n();
  if (strategy.theta.size() != width) throw DimensionMismatch("MERP vector length differs from k*n");
  ObservableAssignment out;
  for (int a = 1; a <= game.k(); ++a) {
    for (int j = 1; j <= game.n(); ++j) {
      out.set(a, j, Observable::rotation(strategy.theta[matrix_column(game.n(), a, j)]));
    }
  }
  return out;
}

inline double simulate_merp(const Game& game, const MerpStrategy& strategy) {
  return simulate_strategy_value(game, merp_assignment(game, strategy), merp_state(game.k()));
}

/// Six-qubit state on which Z, X, Y (questions 1, 2, 3) win every clause of
/// game_123().
inline PureState psi_123() {
  PureState s = zero_state(6);
  const double a = 1.0 / std::sqrt(8.0);
  auto put = [&](const char* bits, double value) {
    s.amplitudes[std::stoul(bits, nullptr, 2)] = value;
  };
  put("000000", a);
  put("111111", a);
  for (const char* b : {"100100", "001010", "010001", "011011", "110101", "101110"}) put(b, -a);
  return s;
}

inline ObservableAssignment pauli_123_assignment() {
  ObservableAssignment out;
  for (int a = 1; a <= 6; ++a) {
    out.set(a, 1, Observable::z());
    out.set(a, 2, Observable::x());
    out.set(a, 3, Observable::y());
  }
  return out;
}

/// Largest ||Q_i psi - s_i psi|| over the clauses of the game.
inline double eigen_residual(const Game& game, const ObservableAssignment& assignment,
                             const PureState& state) {
  double worst = 0.0;
  for (std::size_t i = 1; i <= game.m(); ++i) {
    const PureState q = apply_clause(state, game, i, assignment);
    const int s = game.clause(i).sign;
    double err = 0.0;
    for (std::size_t b = 0; b < q.amplitudes.size(); ++b) {
      err += std::norm(q.amplitudes[b] - static_cast<double>(s) * state.amplitudes[b]);
    }
    worst = std::max(worst, std::sqrt(err));
  }
  return worst;
}

inline double verify_123_residual(const PureState& state) {
  return eigen_residual(game_123(), pauli_123_assignment(), state);
}

inline bool verify_123(const PureState& state) {
  return verify_123_residual(state) <= kEigenTolerance;
}

inline bool verify_123() { return verify_123(psi_123()); }

}  // namespace xorgames
