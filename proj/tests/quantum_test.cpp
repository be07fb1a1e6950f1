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


#include <gtest/gtest.h>

#include <random>

#include "xorgames/certificate.hpp"
#include "xorgames/families.hpp"
#include "xorgames/pref_merp.hpp"
#include "xorgames/quantum.hpp"

namespace xorgames {
namespace {

MerpStrategy zeros(const Game& g) {
  return MerpStrategy{RationalVector(static_cast<std::size_t>(g.k()) * g.n(), BigRational(0))};
}

TEST(States, MerpState) {
  const PureState one = merp_state(1);
  EXPECT_NEAR(std::abs(one.amplitudes[0]), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(one.amplitudes[1]), 1 / std::sqrt(2.0), 1e-15);
  const PureState three = merp_state(3);
  EXPECT_NEAR(three.norm(), 1.0, 1e-15);
  EXPECT_NEAR(three.amplitudes[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(three.amplitudes[7].real(), 1 / std::sqrt(2.0), 1e-15);
  for (int b = 1; b < 7; ++b) EXPECT_EQ(three.amplitudes[b], Amplitude{});
  EXPECT_THROW(merp_state(0), InvalidParameter);
  EXPECT_THROW(merp_state(kMaxQubits + 1), InvalidParameter);
}

TEST(Clauses, MerpExpectations) {
  const Game g = ghz();
  const MerpStrategy zero = zeros(g);
  const ObservableAssignment a = merp_assignment(g, zero);
  const PureState psi = merp_state(3);
  // All angles zero: X⊗X⊗X has eigenvalue +1 on the GHZ state.
  for (std::size_t i = 1; i <= g.m(); ++i) EXPECT_NEAR(clause_expectation(psi, g, i, a), 1.0, 1e-12);
  // Angles summing to π flip the sign.
  MerpStrategy pi = zero;
  pi.theta[0] = BigRational(1, 2);
  pi.theta[g.n()] = BigRational(1, 4);
  pi.theta[2 * g.n()] = BigRational(1, 4);
  ASSERT_EQ(g.clause(1).query, (std::vector<int>{1, 1, 1}));
  EXPECT_NEAR(clause_expectation(psi, g, 1, merp_assignment(g, pi)), -1.0, 1e-12);
}

TEST(Clauses, ZObservablesOnGhzState) {
  // Z on all three qubits maps |000> + |111> to the orthogonal |000> - |111>,
  // while Z on an even number of qubits stabilises the cat state.
  ObservableAssignment a;
  for (int p = 1; p <= 3; ++p) a.set(p, 1, Observable::z());
  const Game zzz(3, 1, {{{1, 1, 1}, 1}});
  EXPECT_NEAR(clause_expectation(merp_state(3), zzz, 1, a), 0.0, 1e-15);
  EXPECT_NEAR(clause_win_probability(merp_state(3), zzz, 1, a), 0.5, 1e-15);
  const Game zz(2, 1, {{{1, 1}, 1}});
  EXPECT_NEAR(clause_expectation(merp_state(2), zz, 1, a), 1.0, 1e-15);
}

TEST(Strategies, GhzTextbook) {
  const Game g = ghz();
  const auto merp = find_merp(g);
  ASSERT_TRUE(merp);
  EXPECT_NEAR(simulate_merp(g, *merp), 1.0, 1e-12);
  EXPECT_TRUE(merp_value(g, *merp).exact_value_1);
  // Textbook X/Y assignment.
  ObservableAssignment a;
  for (int p = 1; p <= 3; ++p) {
    a.set(p, 1, Observable::x());
    a.set(p, 2, Observable::y());
  }
  EXPECT_NEAR(simulate_strategy_value(g, a, merp_state(3)), 1.0, 1e-12);
}

TEST(Strategies, GhzZeroAngles) {
  const Game g = ghz();
  // Only the positive clause is won.
  EXPECT_NEAR(simulate_merp(g, zeros(g)), 0.25, 1e-12);
  EXPECT_NEAR(merp_value(g, zeros(g)).value, 0.25, 1e-12);
}

TEST(Strategies, RandomMerpMatchesClosedForm) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 3);
    const Game g = random_game(k, n, 1 + rng() % 10, rng());
    MerpStrategy s;
    for (int c = 0; c < k * n; ++c) {
      s.theta.emplace_back(static_cast<long long>(rng() % 41) - 20,
                           static_cast<long long>(1 + rng() % 12));
    }
    EXPECT_NEAR(simulate_merp(g, s), merp_value(g, s).value, 1e-9);
  }
}

TEST(Observables, Involutions) {
  std::mt19937_64 rng(5);
  PureState psi = zero_state(2);
  std::normal_distribution<double> d;
  for (auto& x : psi.amplitudes) x = {d(rng), d(rng)};
  for (const Observable& o : {Observable::x(), Observable::y(), Observable::z(),
                              Observable::rotation(BigRational(2, 7))}) {
    for (int p = 1; p <= 2; ++p) {
      PureState t = psi;
      apply_observable(t, p, o);
      apply_observable(t, p, o);
      for (std::size_t b = 0; b < psi.amplitudes.size(); ++b) {
        EXPECT_NEAR(std::abs(t.amplitudes[b] - psi.amplitudes[b]), 0.0, 1e-12);
      }
    }
  }
}

TEST(Observables, DifferentPlayersCommute) {
  std::mt19937_64 rng(9);
  PureState psi = zero_state(2);
  std::normal_distribution<double> d;
  for (auto& x : psi.amplitudes) x = {d(rng), d(rng)};
  const Observable a = Observable::rotation(BigRational(1, 3));
  const Observable b = Observable::y();
  PureState ab = psi, ba = psi;
  apply_observable(ab, 1, a);
  apply_observable(ab, 2, b);
  apply_observable(ba, 2, b);
  apply_observable(ba, 1, a);
  for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
    EXPECT_NEAR(std::abs(ab.amplitudes[i] - ba.amplitudes[i]), 0.0, 1e-12);
  }
}

TEST(Observables, YMatchesRotationByHalfTurn) {
  PureState a = zero_state(1), b = zero_state(1);
  a.amplitudes = {{0.6, 0.0}, {0.0, 0.8}};
  b.amplitudes = a.amplitudes;
  apply_observable(a, 1, Observable::y());
  apply_observable(b, 1, Observable::rotation(BigRational(1, 2)));
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(std::abs(a.amplitudes[i] - b.amplitudes[i]), 0.0, 1e-15);
}

TEST(Game123, EigenvectorCheck) {
  EXPECT_TRUE(verify_123());
  EXPECT_NEAR(psi_123().norm(), 1.0, 1e-15);
  EXPECT_NEAR(simulate_strategy_value(game_123(), pauli_123_assignment(), psi_123()), 1.0, 1e-12);
  for (std::size_t b = 0; b < 64; ++b) {
    PureState perturbed = psi_123();
    perturbed.amplitudes[b] += 1e-6;
    EXPECT_FALSE(verify_123(perturbed));
  }
}

TEST(Game123, AllYClauseHasEigenvalueMinusOne) {
  const Game yy(6, 3, {{{3, 3, 3, 3, 3, 3}, -1}});
  EXPECT_NEAR(clause_expectation(psi_123(), yy, 1, pauli_123_assignment()), -1.0, 1e-12);
}

TEST(Game123, MissingObservableThrows) {
  ObservableAssignment a = pauli_123_assignment();
  ObservableAssignment partial;
  for (const auto& [key, o] : a.entries()) {
    if (key != std::pair{6, 3}) partial.set(key.first, key.second, o);
  }
  EXPECT_THROW(simulate_strategy_value(game_123(), partial, psi_123()), PreconditionError);
}

TEST(Certificates, ObservablesRoundTrip) {
  ObservableAssignment a = pauli_123_assignment();
  a.set(1, 4, Observable::rotation(BigRational(-3, 8)));
  const ObservableAssignment b = observables_from_json(parse_json_text(observables_to_json(a).dump()));
  ASSERT_EQ(a.entries().size(), b.entries().size());
  for (const auto& [key, o] : a.entries()) {
    EXPECT_EQ(b.get(key.first, key.second).kind, o.kind);
    EXPECT_EQ(b.get(key.first, key.second).turns, o.turns);
  }
}

TEST(Certificates, MerpAndPrefRoundTrip) {
  const Game g = ghz();
  const auto merp = find_merp(g);
  ASSERT_TRUE(merp);
  EXPECT_EQ(merp_from_json(merp_to_json(*merp, g.k(), g.n())).theta, merp->theta);
  const auto pref = find_pref(capped_ghz(4));
  ASSERT_TRUE(pref);
  EXPECT_EQ(pref_from_json(pref_to_json(*pref)).z, pref->z);
  EXPECT_THROW(pref_from_json(merp_to_json(*merp, g.k(), g.n())), ParseError);
}

TEST(Certificates, RefutationRoundTrip) {
  const Game g = capped_ghz(4);
  const RefutationCertificate c = build_refutation_symmetric(g, find_pref(g)->z, "cg4");
  const RefutationCertificate d = refutation_from_json(refutation_to_json(c));
  EXPECT_EQ(d.game, "cg4");
  EXPECT_EQ(d.indices, c.indices);
  ASSERT_EQ(d.annotations.size(), c.annotations.size());
  for (std::size_t i = 0; i < c.annotations.size(); ++i) {
    EXPECT_EQ(d.annotations[i].type, c.annotations[i].type);
    EXPECT_EQ(d.annotations[i].offset, c.annotations[i].offset);
    EXPECT_EQ(d.annotations[i].stage, c.annotations[i].stage);
  }
  Json bad = refutation_to_json(c);
  bad["indices"][0] = 0;
  EXPECT_THROW(refutation_from_json(bad), ParseError);
}

}  // namespace
}  // namespace xorgames
