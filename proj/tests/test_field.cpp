#include <gtest/gtest.h>

#include "lcegeom/field.hpp"
#include "oracles.hpp"

using namespace lcegeom;

TEST(Field, GoldenGenerators) {
  EXPECT_EQ(make_field(5).generator(), 2u);
  EXPECT_EQ(make_field(2).generator(), 1u);
  EXPECT_EQ(make_field(2).modulus(), 2u);
}

TEST(Field, RejectsBadModuli) {
  for (std::uint64_t q : {6ull, 9ull, 15ull, 2147483645ull}) {
    try {
      make_field(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::CompositeModulus) << q;
    }
  }
  for (std::uint64_t q : {0ull, 1ull, 1ull << 31, 1ull << 40}) {
    EXPECT_THROW(make_field(q), Error) << q;
  }
}

TEST(Field, Inverse) {
  const auto f = make_field(5);
  EXPECT_EQ(inv(Fq(f, 3)).value(), 2u);
  EXPECT_EQ(inv(Fq(f, 1)).value(), 1u);
  try {
    inv(Fq(f, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Field, DlogGolden) {
  const auto f = make_field(5);
  EXPECT_EQ(dlog(Fq(f, 4)), 2u);
  EXPECT_EQ(dlog(Fq(f, 1)), 0u);
  EXPECT_EQ(dlog(Fq(f, 3)), 3u);
  EXPECT_THROW(dlog(Fq(f, 0)), Error);
}

TEST(Field, PrimalityMatchesTrialDivision) {
  for (std::int64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(static_cast<std::uint64_t>(n)), oracle::trial_prime(n)) << n;
  EXPECT_TRUE(is_prime(2147483647ull));
  EXPECT_FALSE(is_prime(2147483647ull * 3));
}

TEST(Field, GeneratorHasFullOrder) {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull, 101ull, 10007ull}) {
    const auto f = make_field(q);
    const auto g = static_cast<std::int64_t>(f.generator());
    for (std::int64_t e = 1; e < static_cast<std::int64_t>(q) - 1; ++e) EXPECT_NE(oracle::pow_mod(g, e, static_cast<std::int64_t>(q)), 1) << q;
    // Smallest primitive root.
    for (std::int64_t c = 2; c < g; ++c) EXPECT_LT(f.order(static_cast<PrimeField::value_type>(c)), q - 1);
  }
}

TEST(Field, DlogInvertsPowTableAndBabyStep) {
  for (std::uint64_t q : {5ull, 101ull, 65537ull, 1000003ull, 2147483647ull}) {
    const auto f = make_field(q);
    for (std::uint64_t e : std::vector<std::uint64_t>{0, 1, 2, 17, q / 3, q - 2}) {
      const auto a = f.pow(f.generator(), e);
      EXPECT_EQ(f.dlog(a), e % (q - 1)) << "q=" << q << " e=" << e;
    }
  }
}

TEST(Field, ArithmeticAgreesWithIntegers) {
  const auto f = make_field(2147483647ull);
  const std::int64_t q = 2147483647;
  for (std::int64_t a : std::vector<std::int64_t>{0, 1, 2, 12345, q - 1, q - 2}) {
    for (std::int64_t b : std::vector<std::int64_t>{0, 1, 99991, q - 1}) {
      const auto x = f.reduce(a), y = f.reduce(b);
      EXPECT_EQ(f.add(x, y), oracle::mod(a + b, q));
      EXPECT_EQ(f.sub(x, y), oracle::mod(a - b, q));
      EXPECT_EQ(f.mul(x, y), static_cast<std::int64_t>((static_cast<__int128>(a) * b) % q));
      if (y != 0) {
        EXPECT_EQ(f.mul(f.div(x, y), y), x);
      }
    }
  }
  EXPECT_EQ(f.reduce(-1), static_cast<PrimeField::value_type>(q - 1));
}

TEST(Field, SignedPower) {
  const auto f = make_field(7);
  EXPECT_EQ(f.pow_signed(3, -1), f.inv(3));
  EXPECT_EQ(f.pow_signed(3, -2), f.mul(f.inv(3), f.inv(3)));
  EXPECT_EQ(f.pow_signed(0, 0), 1u);
  EXPECT_THROW(f.pow_signed(0, -1), Error);
}
