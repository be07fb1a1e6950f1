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
#include "xorgames/families.hpp"
#include "xorgames/pref_merp.hpp"
#include "xorgames/word.hpp"

namespace xorgames {
namespace {

IntVector ints(std::initializer_list<long long> v) {
  IntVector out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

IntVector scaled(const IntVector& z, long long f) {
  IntVector out;
  for (const BigInt& v : z) out.push_back(v * f);
  return out;
}

TEST(Pref, CappedGhzThree) {
  const auto p = find_pref(capped_ghz(3));
  ASSERT_TRUE(p);
  const IntVector g = ints({-1, 1, 1, 1, -2, -2, -2, 4});
  EXPECT_TRUE(p->z == g || p->z == scaled(g, -1));
  EXPECT_TRUE(oracle::pref_conditions(capped_ghz(3), p->z));
}

TEST(Pref, GhzHasNone) { EXPECT_FALSE(find_pref(ghz())); }

TEST(Pref, Game123) {
  const auto p = find_pref(game_123());
  ASSERT_TRUE(p);
  EXPECT_TRUE(oracle::pref_conditions(game_123(), p->z));
  const IntVector expected = ints({1, 1, 1, -1, -1, -1});
  EXPECT_TRUE(is_valid_pref(game_123(), expected));
  // The kernel is one-dimensional, so the answer is an odd multiple.
  BigInt ratio = p->z[0];
  EXPECT_EQ(p->z, scaled(expected, ratio.convert_to<long long>()));
  EXPECT_EQ(abs(ratio) % 2, 1);
}

TEST(Pref, Multisets) {
  const Game g = capped_ghz(3);
  const IntVector z = ints({-1, 1, 1, 1, -2, -2, -2, 4});
  const PrefMultisets ms = pref_to_multisets(g, z);
  EXPECT_EQ(ms.odd.size(), 7u);
  EXPECT_EQ(ms.even.size(), 7u);
  EXPECT_EQ(ms.odd, (std::vector<std::size_t>{2, 3, 4, 8, 8, 8, 8}));
  EXPECT_EQ(ms.even, (std::vector<std::size_t>{1, 5, 5, 6, 6, 7, 7}));
  EXPECT_THROW(pref_to_multisets(g, IntVector(8)), PreconditionError);
}

TEST(Pref, OddScalingPreservesEvenScalingBreaks) {
  const Game g = capped_ghz(4);
  const auto p = find_pref(g);
  ASSERT_TRUE(p);
  for (long long f : {-3LL, -1LL, 1LL, 3LL, 5LL, 101LL}) EXPECT_TRUE(is_valid_pref(g, scaled(p->z, f)));
  for (long long f : {-2LL, 0LL, 2LL, 4LL}) EXPECT_FALSE(is_valid_pref(g, scaled(p->z, f)));
}

TEST(Merp, Ghz) {
  const auto s = find_merp(ghz());
  ASSERT_TRUE(s);
  EXPECT_TRUE(oracle::merp_conditions(ghz(), s->theta));
  const MerpValue v = merp_value(ghz(), *s);
  EXPECT_TRUE(v.exact_value_1);
  EXPECT_NEAR(v.value, 1.0, 1e-9);

  MerpStrategy textbook{{0, BigRational(1, 2), 0, BigRational(1, 2), 0, BigRational(1, 2)}};
  EXPECT_TRUE(merp_value(ghz(), textbook).exact_value_1);
}

TEST(Merp, ZeroAnglesOnGhz) {
  const MerpValue v = merp_value(ghz(), {RationalVector(6)});
  EXPECT_FALSE(v.exact_value_1);
  EXPECT_NEAR(v.value, 0.25, 1e-12);
}

TEST(Merp, OddResidueFailsExactCheck) {
  MerpStrategy s = *find_merp(ghz());
  s.theta[0] += 1;
  EXPECT_FALSE(merp_value(ghz(), s).exact_value_1);
  EXPECT_THROW(merp_value(ghz(), {RationalVector(5)}), DimensionMismatch);
}

TEST(Merp, ResiduesReduceExactly) {
  // Large even offsets must not disturb the floating value.
  MerpStrategy s = *find_merp(ghz());
  s.theta[0] += BigRational(BigInt("1000000000000000000000000000000"));
  const MerpValue v = merp_value(ghz(), s);
  EXPECT_TRUE(v.exact_value_1);
  EXPECT_NEAR(v.value, 1.0, 1e-12);
}

TEST(Merp, CappedGhzHasNone) { EXPECT_FALSE(find_merp(capped_ghz(3))); }

TEST(Merp, ApdAnySigns) {
  for (int big_k = 1; big_k <= 6; ++big_k) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Game g = apd(big_k, {ApdSignKind::kRandom, seed});
      EXPECT_FALSE(find_pref(g));
      const auto s = find_merp(g);
      ASSERT_TRUE(s);
      EXPECT_TRUE(oracle::merp_conditions(g, s->theta));
    }
  }
}

TEST(Duality, Families) {
  EXPECT_TRUE(std::holds_alternative<MerpStrategy>(duality_check(ghz())));
  for (int n = 2; n <= 8; ++n) {
    EXPECT_TRUE(std::holds_alternative<PrefSpecification>(duality_check(capped_ghz(n))));
  }
  EXPECT_TRUE(std::holds_alternative<PrefSpecification>(duality_check(game_123())));
}

TEST(Duality, RandomGames) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Game g = random_game(2 + seed % 3, 1 + seed % 6, 1 + seed % 20, seed);
    const auto p = find_pref(g);
    const auto s = find_merp(g);
    ASSERT_NE(p.has_value(), s.has_value()) << seed;
    if (p) {
      EXPECT_TRUE(oracle::pref_conditions(g, p->z));
      EXPECT_TRUE(verify_pref(g, p->z));
    } else {
      EXPECT_TRUE(oracle::merp_conditions(g, s->theta));
      EXPECT_NEAR(merp_value(g, *s).value, 1.0, 1e-9);
    }
  }
}

TEST(Symmetric, Decisions) {
  const SymmetricDecision ghz_d = decide_symmetric(ghz());
  EXPECT_TRUE(ghz_d.value1);
  ASSERT_TRUE(ghz_d.merp);
  EXPECT_TRUE(merp_value(ghz(), *ghz_d.merp).exact_value_1);

  const SymmetricDecision cg = decide_symmetric(capped_ghz(5));
  EXPECT_FALSE(cg.value1);
  ASSERT_TRUE(cg.pref);
  EXPECT_TRUE(verify_pref(capped_ghz(5), cg.pref->z));

  EXPECT_THROW(decide_symmetric(game_123()), PreconditionError);
}

TEST(Symmetric, AgreesWithDuality) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Game g = random_symmetric_game(3, 2 + seed % 3, 1 + seed % 4, seed);
    const SymmetricDecision d = decide_symmetric(g);
    EXPECT_EQ(d.value1, std::holds_alternative<MerpStrategy>(duality_check(g)));
  }
}

}  // namespace
}  // namespace xorgames
