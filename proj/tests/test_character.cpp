#include <gtest/gtest.h>

#include <random>

#include <dbn/character.hpp>
#include <dbn/good_pair.hpp>

using dbn::Polynomial;

TEST(Character, Examples) {
  const Polynomial d(3, {1, 2, 0, 1});
  for (std::int64_t a = 0; a < 3; ++a) EXPECT_EQ(dbn::jacobi(d, Polynomial(3, {-a, 1})), -1);
  EXPECT_EQ(dbn::jacobi(Polynomial(3, {0, 1, 0, 1}), Polynomial(3, {0, 1})), 0);
  EXPECT_EQ(dbn::jacobi(Polynomial(3, {1, 0, 1}), Polynomial(3, {0, 1})), 1);
  EXPECT_EQ(dbn::jacobi_oracle(Polynomial(3, {1, 0, 1}), Polynomial(3, {0, 1})), 1);
}

TEST(Character, ConstantsAndZero) {
  const Polynomial d(5, {2, 2, 0, 1, 1, 1});
  EXPECT_EQ(dbn::jacobi(d, Polynomial(5)), 0);
  // legendre(a)^deg D
  EXPECT_EQ(dbn::jacobi(d, Polynomial(5, {2})), -1);
  EXPECT_EQ(dbn::jacobi(d, Polynomial(5, {4})), 1);
  EXPECT_EQ(dbn::jacobi(Polynomial(5, {1, 0, 0, 0, 1}), Polynomial(5, {2})), 1);
}

TEST(Character, InvalidModulus) {
  EXPECT_THROW(dbn::QuadraticCharacter(Polynomial(3, {1})), std::invalid_argument);
  EXPECT_THROW(dbn::QuadraticCharacter(Polynomial(3, {0, 0, 1})), std::invalid_argument);
  EXPECT_THROW(dbn::QuadraticCharacter(Polynomial(3, {1, 2})), std::invalid_argument);
  EXPECT_THROW(dbn::jacobi(Polynomial(3, {1, 2, 0, 1}), Polynomial(5, {1})), dbn::ModulusMismatch);
}

TEST(Character, MatchesOracleRandom) {
  std::mt19937_64 rng(11);
  for (dbn::residue_t p : {3u, 5u, 7u, 11u}) {
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    int checked = 0;
    while (checked < 400) {
      std::vector<std::int64_t> dc(2 + rng() % 6), fc(1 + rng() % 9);
      for (auto& x : dc) x = coef(rng);
      for (auto& x : fc) x = coef(rng);
      dc.back() = 1;
      const Polynomial d(p, dc), f(p, fc);
      if (!dbn::is_squarefree(d)) continue;
      ASSERT_EQ(dbn::jacobi(d, f), dbn::jacobi_oracle(d, f)) << d.to_string() << " / " << f.to_string();
      ++checked;
    }
  }
}

TEST(Character, MultiplicativeAndPeriodic) {
  const dbn::QuadraticCharacter chi(Polynomial(5, {2, 2, 0, 1, 1, 1}));
  const auto& d = chi.modulus();
  std::vector<Polynomial> fs;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& f : dbn::MonicEnumerator(5, n)) fs.push_back(f.scaled(3));
  }
  for (const auto& f : fs) {
    for (const auto& h : fs) EXPECT_EQ(chi(f * h), chi(f) * chi(h));
    EXPECT_EQ(chi(f + d * Polynomial(5, {1, 4})), chi(f));
  }
}

TEST(GoodPair, Examples) {
  EXPECT_TRUE(dbn::good_pair_check(Polynomial(3, {1, 2, 0, 1})).ok);
  EXPECT_EQ(dbn::good_pair_check(Polynomial(3, {1, 0, 1})).reason, "degree must be odd and >= 3");
  EXPECT_EQ(dbn::good_pair_check(Polynomial(3, {0, 0, 0, 1})).reason, "polynomial must be squarefree");
  EXPECT_EQ(dbn::good_pair_check(Polynomial(3, {1, 2, 0, 2})).reason, "polynomial must be monic");
  EXPECT_THROW(dbn::require_good_pair(Polynomial(3, {1, 0, 1})), dbn::NotAGoodPair);
}
