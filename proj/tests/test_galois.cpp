#include <gtest/gtest.h>

#include <random>

#include "echg/galois.hpp"

using namespace echg;

TEST(Galois, Moduli) {
  EXPECT_EQ(GfField(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));  // x^2 + x + 1
  EXPECT_EQ(GfField(3, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));     // x
  EXPECT_EQ(GfField(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));  // x^2 + 1
  EXPECT_EQ(GfField(5, 2).order(), 25u);
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u, 128u})
    EXPECT_TRUE(is_irreducible(GfField::of_order(q).modulus(), GfField::of_order(q).characteristic()));
}

TEST(Galois, ModulusIsSmallestIrreducible) {
  // Oracle: enumerate monic degree-2 polynomials over GF(p), constant term as
  // the leading comparison key, and test for roots directly.
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    std::vector<std::uint32_t> expected;
    for (std::uint32_t c0 = 0; c0 < p && expected.empty(); ++c0)
      for (std::uint32_t c1 = 0; c1 < p && expected.empty(); ++c1) {
        bool root = false;
        for (std::uint32_t x = 0; x < p; ++x) root |= (x * x + c1 * x + c0) % p == 0;
        if (!root) expected = {c0, c1, 1};
      }
    EXPECT_EQ(GfField(p, 2).modulus(), expected) << "p=" << p;
  }
}

TEST(Galois, Errors) {
  EXPECT_THROW(GfField(4, 1), std::invalid_argument);
  EXPECT_THROW(GfField(2, 0), std::invalid_argument);
  EXPECT_THROW(GfField(2, 17), std::invalid_argument);
  EXPECT_NO_THROW(GfField(2, 16));
  EXPECT_THROW(GfField::of_order(6), std::invalid_argument);
  EXPECT_THROW(GfField(3, 1).zero().inverse(), std::domain_error);
  const GfField a(3, 1), b(5, 1);
  EXPECT_THROW(a.one() + b.one(), std::invalid_argument);
}

TEST(Galois, ElementExamples) {
  const GfField gf3(3, 1);
  EXPECT_EQ(gf3.element(2).inverse(), gf3.element(2));

  const GfField gf4(2, 2);
  const GfElement x = gf4.element(2);  // coefficients (0, 1)
  EXPECT_EQ(x.coefficients(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ((x * x).coefficients(), (std::vector<std::uint32_t>{1, 1}));  // x + 1

  for (const GfField& f : {GfField(2, 1), GfField(7, 1), GfField(3, 3)})
    for (const auto& a : f.elements()) EXPECT_TRUE((a + (-a)).is_zero());
}

TEST(Galois, ElementOrder) {
  const auto gf2 = GfField(2, 1).elements();
  ASSERT_EQ(gf2.size(), 2u);
  EXPECT_EQ(gf2[0].index(), 0u);
  EXPECT_EQ(gf2[1].index(), 1u);
  EXPECT_EQ(GfField(2, 2).elements().size(), 4u);
  EXPECT_TRUE(GfField(3, 2).elements().front().is_zero());
}

TEST(Galois, FieldAxiomsExhaustive) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u}) {
    const GfField f = GfField::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Galois, InversesExhaustive) {
  for (std::uint32_t q = 2; q <= 49; ++q) {
    if (!prime_power(q)) continue;
    const GfField f = GfField::of_order(q);
    for (const auto& a : f.elements()) {
      if (a.is_zero()) continue;
      EXPECT_EQ(a * a.inverse(), f.one()) << "q=" << q;
    }
  }
}

TEST(Galois, RandomSamplesInLargerFields) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {243u, 1024u, 2401u, 65536u}) {
    const GfField f = GfField::of_order(q);
    for (int i = 0; i < 2000; ++i) {
      const std::uint32_t a = rng() % q, b = rng() % q, c = rng() % q;
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    EXPECT_EQ(f.pow(2 % q, q), 2 % q);  // Frobenius fixes the prime field
  }
}

TEST(Galois, PrimePowers) {
  EXPECT_EQ(prime_power(1), std::nullopt);
  EXPECT_EQ(prime_power(6), std::nullopt);
  EXPECT_EQ(prime_power(9), std::make_optional(std::make_pair(3u, 2u)));
  EXPECT_EQ(prime_power(13), std::make_optional(std::make_pair(13u, 1u)));
  EXPECT_EQ(prime_power(64), std::make_optional(std::make_pair(2u, 6u)));
}

TEST(Galois, MultiplicativeGroupOrder) {
  for (std::uint32_t q = 2; q <= 25; ++q) {
    if (!prime_power(q)) continue;
    const GfField f = GfField::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      std::uint32_t acc = 1;
      for (std::uint32_t i = 0; i < q - 1; ++i) acc = f.mul(acc, a);
      EXPECT_EQ(acc, 1u) << "q=" << q << " a=" << a;
    }
  }
}
