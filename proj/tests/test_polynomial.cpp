#include <gtest/gtest.h>

#include "lcegeom/polynomial.hpp"
#include "lcegeom/rng.hpp"

using namespace lcegeom;

namespace {

using value_type = PrimeField::value_type;

SparsePoly random_poly(const PrimeField& f, std::size_t nvars, Rng& rng, int terms, int max_deg) {
  SparsePoly p(f, nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<VarPower> fs;
    const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int d = 0; d < deg; ++d) fs.push_back({static_cast<std::uint32_t>(rng.below(nvars)), 1});
    p.add_term(Monomial(fs), static_cast<value_type>(rng.below(f.modulus())));
  }
  return p;
}

std::vector<value_type> random_point(const PrimeField& f, std::size_t nvars, Rng& rng) {
  std::vector<value_type> x(nvars);
  for (auto& v : x) v = static_cast<value_type>(rng.below(f.modulus()));
  return x;
}

}  // namespace

TEST(Polynomial, MonomialCanonicalForm) {
  const Monomial m({{3, 1}, {1, 2}, {3, 2}, {0, 0}});
  ASSERT_EQ(m.factors().size(), 2u);
  EXPECT_EQ(m.factors()[0], (VarPower{1, 2}));
  EXPECT_EQ(m.factors()[1], (VarPower{3, 3}));
  EXPECT_EQ(m.degree(), 5u);
  EXPECT_EQ(Monomial({{1, 1}}) * Monomial({{1, 1}, {2, 1}}), Monomial({{1, 2}, {2, 1}}));
}

TEST(Polynomial, NoZeroCoefficientsStored) {
  const auto f = make_field(5);
  SparsePoly p(f, 4);
  p.add_term(Monomial({{0, 1}}), 3);
  p.add_term(Monomial({{0, 1}}), 2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.monomial_count(), 0u);
  p.add_term(Monomial(), 0);
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.add_term(Monomial({{4, 1}}), 1), Error);
  const auto x = SparsePoly::variable(f, 4, 0);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
  Rng rng(4);
  for (std::uint64_t q : {2ull, 5ull, 10007ull}) {
    const auto f = make_field(q);
    for (int t = 0; t < 50; ++t) {
      const auto a = random_poly(f, 6, rng, 6, 3), b = random_poly(f, 6, rng, 6, 3);
      const value_type c = static_cast<value_type>(rng.below(q));
      const auto x = random_point(f, 6, rng);
      const auto ea = a.evaluate(x), eb = b.evaluate(x);
      EXPECT_EQ((a + b).evaluate(x), f.add(ea, eb));
      EXPECT_EQ((a - b).evaluate(x), f.sub(ea, eb));
      EXPECT_EQ((a * b).evaluate(x), f.mul(ea, eb));
      EXPECT_EQ(a.scaled(c).evaluate(x), f.mul(ea, c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_LE((a * b).total_degree(), a.total_degree() + b.total_degree());
      const auto prod = a * b;
      for (const auto& [m, coeff] : prod.terms()) EXPECT_NE(coeff, 0u);
    }
  }
}

TEST(Polynomial, DegreeAndHomogeneity) {
  const auto f = make_field(7);
  const auto x = SparsePoly::variable(f, 4, 0), y = SparsePoly::variable(f, 4, 1);
  const auto h = x * y + y * y;
  EXPECT_EQ(h.total_degree(), 2u);
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_FALSE((h + x).is_homogeneous());
  EXPECT_EQ(SparsePoly(f, 4).monomial_count(), 0u);
  EXPECT_EQ(SparsePoly::constant(f, 4, -1).evaluate(std::vector<value_type>(4, 0)), 6u);
}

TEST(Polynomial, TermOrderIsGradedLex) {
  const auto f = make_field(7);
  SparsePoly p(f, 4);
  p.add_term(Monomial(), 1);
  p.add_term(Monomial({{2, 1}}), 1);
  p.add_term(Monomial({{0, 1}, {3, 1}}), 1);
  p.add_term(Monomial({{0, 2}}), 1);
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) order.push_back(m);
  EXPECT_EQ(order, (std::vector<Monomial>{Monomial({{0, 2}}), Monomial({{0, 1}, {3, 1}}), Monomial({{2, 1}}), Monomial()}));
  EXPECT_EQ(format_poly(p, 2), "x11^2 + x11*x22 + x21 + 1");
}

TEST(Polynomial, IncompatibleOperandsRejected) {
  const auto a = SparsePoly::variable(make_field(5), 4, 0);
  const auto b = SparsePoly::variable(make_field(7), 4, 0);
  const auto c = SparsePoly::variable(make_field(5), 9, 0);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * c, Error);
  EXPECT_THROW(a.evaluate(std::vector<value_type>(3, 0)), Error);
}
