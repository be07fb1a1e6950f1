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

#include <cmath>

#include "oracles.hpp"
#include "xorgames/classical.hpp"
#include "xorgames/families.hpp"

namespace xorgames {
namespace {

const Game kContradiction(3, 1, {{{1, 1, 1}, -1}, {{1, 1, 1}, 1}});
const Game kSingle(3, 1, {{{1, 1, 1}, 1}});

TEST(ValueOne, Examples) {
  EXPECT_FALSE(classical_value1(ghz()));
  const auto s = classical_value1(kSingle);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->answers.is_zero());
  EXPECT_FALSE(classical_value1(kContradiction));
}

TEST(Refutation, Examples) {
  const auto r = classical_refutation(kContradiction);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->y, F2Vector::from_bits({1, 1}));
  const auto g = classical_refutation(ghz());
  ASSERT_TRUE(g);
  EXPECT_TRUE(verify_classical_refutation(ghz(), g->y));
  EXPECT_FALSE(classical_refutation(kSingle));
}

TEST(Refutation, ExclusiveDualityOnRandomGames) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Game g = random_game(2 + seed % 3, 1 + seed % 6, 1 + seed % 20, seed);
    const auto s = classical_value1(g);
    const auto r = classical_refutation(g);
    ASSERT_NE(s.has_value(), r.has_value()) << seed;
    if (s) {
      EXPECT_EQ(classical_strategy_value(g, *s), 1);
    } else {
      EXPECT_TRUE(verify_classical_refutation(g, r->y));
    }
  }
}

TEST(StrategyValue, Examples) {
  EXPECT_EQ(classical_strategy_value(ghz(), {F2Vector(6)}), BigRational(1, 4));
  EXPECT_EQ(classical_strategy_value(kSingle, *classical_value1(kSingle)), 1);
  EXPECT_THROW(classical_strategy_value(ghz(), {F2Vector(5)}), DimensionMismatch);
}

TEST(Sigma2, Examples) {
  EXPECT_EQ(sigma2(ghz()), 3u);
  EXPECT_EQ(sigma2(kSingle), 1u);
  for (int big_k = 1; big_k <= 6; ++big_k) {
    EXPECT_EQ(sigma2(apd(big_k, {ApdSignKind::kAllPlus, 0})), static_cast<std::size_t>(big_k) + 1);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Game g = random_game(3, 1 + seed % 5, 1 + seed % 20, seed);
    EXPECT_LE(sigma2(g), std::min<std::size_t>(g.m(), static_cast<std::size_t>(g.k()) * g.n()));
  }
}

TEST(ExactValue, Examples) {
  EXPECT_EQ(classical_value_exact(ghz()), BigRational(3, 4));
  EXPECT_EQ(classical_value_exact(game_123()), BigRational(5, 6));
  EXPECT_EQ(classical_value_exact(apd(2)), BigRational(3, 4));
  EXPECT_EQ(classical_value_exact(kSingle), 1);
}

TEST(ExactValue, MatchesStrategyEnumeration) {
  std::vector<Game> games = {ghz(), small_123(), capped_ghz(2), capped_ghz(3), apd(2), apd(3)};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    games.push_back(random_game(2 + seed % 3, 1 + seed % 4, 1 + seed % 15, seed));
  }
  for (const Game& g : games) {
    const BigRational v = classical_value_exact(g);
    EXPECT_EQ(v, oracle::classical_value(g));
    EXPECT_EQ(v == 1, classical_value1(g).has_value());
    EXPECT_GE(v, classical_strategy_value(g, {F2Vector(static_cast<std::size_t>(g.k()) * g.n())}));
  }
}

TEST(ExactValue, Guard) {
  // 25 independent clauses on distinct question pairs: σ2 = 25.
  std::vector<Clause> clauses;
  for (int j = 1; j <= 25; ++j) clauses.push_back({{j, 1}, 1});
  EXPECT_THROW(classical_value_exact(Game(2, 25, clauses)), GuardExceeded);
}

TEST(Adversarial, Ghz) {
  const AdversarialSigns adv = adversarial_signs(game_matrix(ghz()).first);
  EXPECT_EQ(adv.value, BigRational(3, 4));
  EXPECT_EQ(adv.distance, 1u);
  EXPECT_EQ(adv.signs, (ParityBits{0, 0, 0, 1}));
  // The published sign choice is another optimum.
  Game published = ghz();
  EXPECT_EQ(oracle::classical_value(published), adv.value);
}

TEST(Adversarial, FullRankHasValueOne) {
  const Game g(2, 2, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}});
  const AdversarialSigns adv = adversarial_signs(game_matrix(g).first);
  EXPECT_EQ(adv.distance, 0u);
  EXPECT_EQ(adv.value, 1);
}

TEST(Adversarial, MinimizesValueOverAllSigns) {
  std::vector<Game> bases = {apd(2, {ApdSignKind::kAllPlus, 0}), apd(3, {ApdSignKind::kAllPlus, 0}),
                             capped_ghz(2)};
  for (std::uint64_t seed = 0; seed < 40; ++seed) bases.push_back(random_game(2, 3, 3 + seed % 6, seed));
  for (const Game& base : bases) {
    const auto [a, s0] = game_matrix(base);
    const AdversarialSigns adv = adversarial_signs(a);
    BigRational best = 2;
    std::uint64_t best_bits = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.rows); ++bits) {
      ParityBits s(a.rows);
      for (std::size_t i = 0; i < a.rows; ++i) s[i] = (bits >> (a.rows - 1 - i)) & 1u;
      const BigRational v = oracle::classical_value(game_from_matrix(base.k(), base.n(), a, s));
      if (v < best) {
        best = v;
        best_bits = bits;
      }
    }
    EXPECT_EQ(adv.value, best);
    ParityBits lex(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) lex[i] = (best_bits >> (a.rows - 1 - i)) & 1u;
    EXPECT_EQ(adv.signs, lex);
  }
}

TEST(Adversarial, ApdThree) {
  const Game g = apd(3);
  const BigRational v = classical_value_exact(g);
  EXPECT_LE(v.convert_to<double>(), 0.5 + std::sqrt(4.0 / 16.0) + 1e-12);
  EXPECT_EQ(v, adversarial_signs(game_matrix(g).first).value);
  EXPECT_DOUBLE_EQ(existence_bound(g), 0.5 + std::sqrt(4.0 / 16.0));
}

TEST(Adversarial, Guard) {
  std::vector<Clause> clauses(30, Clause{{1, 1}, 1});
  EXPECT_THROW(adversarial_signs(game_matrix(Game(2, 1, clauses)).first), GuardExceeded);
}

}  // namespace
}  // namespace xorgames
