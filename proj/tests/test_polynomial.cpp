#include <gtest/gtest.h>

#include <map>
#include <random>

#include <dbn/polynomial.hpp>

using dbn::Polynomial;

TEST(Polynomial, Examples) {
  EXPECT_EQ(Polynomial(3, {1, 1}) * Polynomial(3, {2, 1}), Polynomial(3, {2, 0, 1}));
  EXPECT_EQ(dbn::gcd(Polynomial(3, {0, 1, 0, 1}), Polynomial(3, {1, 0, 1})), Polynomial(3, {1, 0, 1}));
  EXPECT_EQ(Polynomial(3, {1, 2, 0, 1}).eval_at(dbn::Fp(2, 3)).value(), 1u);
}

TEST(Polynomial, Normalization) {
  const Polynomial z(3, {0, 3, 6});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), Polynomial::kZeroDegree);
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_EQ(Polynomial(3, {1, 2, 0, 1}).to_string(), "1,2,0,1");
  EXPECT_EQ(Polynomial(5, {-1, 7}), Polynomial(5, {4, 2}));
}

TEST(Polynomial, Squarefree) {
  EXPECT_TRUE(dbn::is_squarefree(Polynomial(3, {0, 1, 0, 1})));
  EXPECT_FALSE(dbn::is_squarefree(Polynomial(3, {0, 0, 1})));
  EXPECT_TRUE(dbn::is_squarefree(Polynomial(3, {1, 2, 0, 1})));
  EXPECT_THROW(dbn::is_squarefree(Polynomial(3)), std::invalid_argument);
}

TEST(Polynomial, Irreducible) {
  EXPECT_TRUE(dbn::is_irreducible(Polynomial(3, {1, 0, 1})));
  EXPECT_FALSE(dbn::is_irreducible(Polynomial(3, {0, 1, 0, 1})));
  EXPECT_TRUE(dbn::is_irreducible(Polynomial(3, {1, 2, 0, 1})));
}

TEST(Polynomial, DivisionByZeroThrows) {
  EXPECT_THROW(Polynomial(3, {1, 1}).divmod(Polynomial(3)), std::domain_error);
}

TEST(Polynomial, DivmodIdentityRandom) {
  std::mt19937_64 rng(7);
  for (dbn::residue_t p : {3u, 5u, 7u}) {
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::int64_t> a(1 + rng() % 9), b(1 + rng() % 5);
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      const Polynomial A(p, a), B(p, b);
      if (B.is_zero()) continue;
      const auto [q, r] = A.divmod(B);
      EXPECT_EQ(q * B + r, A);
      EXPECT_LT(r.degree(), B.degree());
      const Polynomial g = dbn::gcd(A, B);
      EXPECT_TRUE((A % g).is_zero());
      EXPECT_TRUE((B % g).is_zero());
    }
  }
}

TEST(Polynomial, EnumeratorExamples) {
  const dbn::MonicEnumerator e0(3, 0);
  ASSERT_EQ(e0.size(), 1u);
  EXPECT_EQ(e0.at(0), Polynomial(3, {1}));
  EXPECT_EQ(dbn::MonicEnumerator(3, 2).size(), 9u);
  std::vector<Polynomial> lin(dbn::MonicEnumerator(5, 1).begin(), dbn::MonicEnumerator(5, 1).end());
  ASSERT_EQ(lin.size(), 5u);
  for (std::int64_t a = 0; a < 5; ++a) EXPECT_EQ(lin[static_cast<std::size_t>(a)], Polynomial(5, {a, 1}));
  EXPECT_THROW(dbn::MonicEnumerator(3, 2).at(9), std::out_of_range);
}

TEST(Polynomial, EnumeratorIsABijection) {
  const dbn::MonicEnumerator e(3, 4);
  std::map<std::string, int> seen;
  for (const auto& f : e) {
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f.degree(), 4);
    ++seen[f.to_string()];
  }
  EXPECT_EQ(seen.size(), 81u);
}

// Necklace formula: (1/n) sum_{d | n} mu(d) p^{n/d}.
TEST(Polynomial, IrreducibleCountsMatchNecklaceFormula) {
  const int expected[] = {0, 3, 3, 8, 18, 48, 116};
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const auto& f : dbn::MonicEnumerator(3, n)) count += dbn::is_irreducible(f);
    EXPECT_EQ(count, expected[n]) << "n = " << n;
  }
}

TEST(Polynomial, SquarefreeCountIsPnMinusPnMinus1) {
  for (dbn::residue_t p : {3u, 5u}) {
    for (int n = 2; n <= 4; ++n) {
      std::uint64_t count = 0;
      for (const auto& f : dbn::MonicEnumerator(p, n)) count += dbn::is_squarefree(f);
      std::uint64_t pn = 1;
      for (int i = 0; i < n; ++i) pn *= p;
      EXPECT_EQ(count, pn - pn / p);
    }
  }
}

TEST(Polynomial, FactorsMultiplyBack) {
  for (const auto& f : dbn::MonicEnumerator(3, 5)) {
    Polynomial prod(3, {1});
    for (const auto& factor : dbn::monic_factors(f)) {
      EXPECT_TRUE(dbn::is_irreducible(factor));
      prod = prod * factor;
    }
    EXPECT_EQ(prod, f);
  }
}

TEST(Polynomial, IntegerReduction) {
  EXPECT_EQ(dbn::reduce_int_poly(std::vector<std::int64_t>{1, 1, 0, 1}, 3), Polynomial(3, {1, 1, 0, 1}));
  EXPECT_EQ(dbn::reduce_int_poly(std::vector<std::int64_t>{10, 5, 0, 1}, 5), Polynomial(5, {0, 0, 0, 1}));
  EXPECT_EQ(dbn::reduce_int_poly(std::vector<std::int64_t>{1, 1, 0, 3}, 3).degree(), 1);
}

TEST(Polynomial, ParseCoefficients) {
  EXPECT_EQ(dbn::parse_coefficients("1,2,0,1"), (std::vector<std::int64_t>{1, 2, 0, 1}));
  EXPECT_EQ(dbn::parse_coefficients("-3,+4"), (std::vector<std::int64_t>{-3, 4}));
  EXPECT_THROW(dbn::parse_coefficients(""), std::invalid_argument);
  EXPECT_THROW(dbn::parse_coefficients("1,,2"), std::invalid_argument);
  EXPECT_THROW(dbn::parse_coefficients("1, 2"), std::invalid_argument);
  EXPECT_EQ(dbn::format_coefficients(std::vector<std::int64_t>{1, -3, 5}), "1,-3,5");
}

TEST(Polynomial, PowmodMatchesRepeatedMultiplication) {
  const Polynomial m(5, {2, 2, 0, 1, 1, 1});
  const Polynomial f(5, {3, 1, 4});
  Polynomial acc(5, {1});
  for (std::uint64_t e = 0; e < 30; ++e) {
    EXPECT_EQ(f.powmod(e, m), acc % m);
    acc = (acc * f) % m;
  }
}
