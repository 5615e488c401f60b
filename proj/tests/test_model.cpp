#include <gtest/gtest.h>

#include "lcegeom/harness.hpp"
#include "lcegeom/invariants.hpp"
#include "lcegeom/model.hpp"
#include "lcegeom/rng.hpp"

using namespace lcegeom;

namespace {

using value_type = PrimeField::value_type;

ExponentVector ev42(std::vector<std::int64_t> e) { return ExponentVector(SubsetIndexer::shared(4, 2), std::move(e)); }
const std::vector<std::int64_t> kV1{1, 0, -1, -1, 0, 1};

struct Example {
  PrimeField f = make_field(5);
  FqMatrix G1{f, {{1, 0, 1, 1}, {0, 1, 1, 2}}};
  FqMatrix G2{f, {{1, 0, 1, 2}, {0, 1, 3, 2}}};
  Permutation P{{3, 1, 4, 2}};
  LceInstance instance() const {
    return LceInstance{f, 4, 2, G1, G2, LceSecret{DiagonalElement(f, {1, 3, 4, 2}), P}, 0};
  }
};

SparsePoly form(const PrimeField& f, std::size_t n, std::vector<std::pair<std::uint32_t, value_type>> terms) {
  SparsePoly p(f, n * n);
  for (auto [v, c] : terms) p.add_term(Monomial::variable(v), c);
  return p;
}

std::vector<value_type> random_assignment(const PrimeField& f, std::size_t n, Rng& rng) {
  std::vector<value_type> x(n * n);
  for (auto& v : x) v = static_cast<value_type>(rng.below(f.modulus()));
  return x;
}

}  // namespace

TEST(Model, SymbolicProductGolden) {
  const Example ex;
  const auto L = symbolic_product(ex.G1, false);
  ASSERT_EQ(L.rows, 2u);
  ASSERT_EQ(L.cols, 4u);
  // (G1 X)_{1,1} = x11 + x31 + x41.
  EXPECT_EQ(L(0, 0), form(ex.f, 4, {{var_index(4, 1, 1), 1}, {var_index(4, 3, 1), 1}, {var_index(4, 4, 1), 1}}));
  // (G1 X)_{2,3} = x23 + x33 + 2 x43.
  EXPECT_EQ(L(1, 2), form(ex.f, 4, {{var_index(4, 2, 3), 1}, {var_index(4, 3, 3), 1}, {var_index(4, 4, 3), 2}}));
  for (const auto& e : L.entries) {
    EXPECT_TRUE(e.is_homogeneous());
    EXPECT_EQ(e.total_degree(), 1u);
    EXPECT_LE(e.monomial_count(), 4u);
  }
  const auto id = symbolic_product(FqMatrix::identity(ex.f, 3), false);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) EXPECT_EQ(id(i - 1, j - 1), form(ex.f, 3, {{var_index(3, i, j), 1}}));
  const auto zero_row = symbolic_product(FqMatrix(ex.f, {{0, 0, 0}, {1, 2, 0}}), false);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(zero_row(0, j).is_zero());
  const auto tr = symbolic_product(ex.G1, true);
  EXPECT_EQ(tr(0, 0), form(ex.f, 4, {{var_index(4, 1, 1), 1}, {var_index(4, 1, 3), 1}, {var_index(4, 1, 4), 1}}));
}

TEST(Model, MinorPolyGolden) {
  const Example ex;
  const auto L = symbolic_product(ex.G1, false);
  EXPECT_EQ(minor_poly(L, {1, 2}), L(0, 0) * L(1, 1) - L(0, 1) * L(1, 0));
  const auto L1 = symbolic_product(FqMatrix(ex.f, {{1, 2, 3}}), false);
  EXPECT_EQ(minor_poly(L1, {2}), L1(0, 1));
  EXPECT_THROW(minor_poly(L, {1}), Error);
  EXPECT_THROW(minor_poly(L, {2, 1}), Error);
}

TEST(Model, MinorPolyEvaluatesToNumericMinor) {
  Rng rng(8);
  const auto f = make_field(101);
  for (auto [n, k] : {std::pair{4, 2}, {5, 3}, {4, 4}}) {
    const auto G = random_code(f, n, k, rng).gen();
    const auto L = symbolic_product(G, false);
    const auto idx = SubsetIndexer::shared(n, k);
    for (int t = 0; t < 10; ++t) {
      const auto x = random_assignment(f, static_cast<std::size_t>(n), rng);
      FqMatrix X(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < x.size(); ++i) X(i / static_cast<std::size_t>(n), i % static_cast<std::size_t>(n)) = x[i];
      const auto GX = G * X;
      for (std::size_t r = 0; r < idx->size(); ++r) {
        const auto p = minor_poly(L, (*idx)[r]);
        EXPECT_TRUE(p.is_homogeneous());
        if (!p.is_zero()) {
          EXPECT_EQ(p.total_degree(), static_cast<std::uint64_t>(k));
        }
        EXPECT_EQ(p.evaluate(x), minor(GX, (*idx)[r]).value());
      }
    }
  }
}

TEST(Model, ForwardEquationGolden) {
  const Example ex;
  const auto h = model_equation(ex.G1, 2, ev42(kV1), true);
  const auto& poly = std::get<SparsePoly>(h);
  EXPECT_EQ(poly.total_degree(), 4u);
  EXPECT_TRUE(poly.is_homogeneous());
  EXPECT_EQ(evaluate(h, permutation_assignment(ex.P)), 0u);
  EXPECT_EQ(evaluate(h, permutation_assignment(Permutation({2, 1, 3, 4}))), 1u);
  EXPECT_EQ(evaluate(h, permutation_assignment(Permutation::identity(4))), 0u);
  EXPECT_THROW(model_equation(ex.G1, std::nullopt, ev42(kV1), true), Error);
}

TEST(Model, TransposedEquationGolden) {
  const Example ex;
  const auto h = transpose_equation(ex.G2, 2, ev42(kV1), true);
  EXPECT_EQ(std::get<SparsePoly>(h).total_degree(), 4u);
  EXPECT_EQ(evaluate(h, permutation_assignment(ex.P)), 0u);
  EXPECT_EQ(evaluate(h, permutation_assignment(Permutation::identity(4))), 0u);
}

TEST(Model, LazyMatchesExpanded) {
  Rng rng(123);
  for (std::uint64_t q : {5ull, 101ull}) {
    const auto f = make_field(q);
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
      const auto G = random_code(f, n, k, rng).gen();
      for (const auto& pi : enumerate_pair_invariants(n, k, 3)) {
        const auto v = pair_invariant(n, pi);
        const value_type target = static_cast<value_type>(rng.below(q));
        for (bool transposed : {false, true}) {
          const auto ex = transposed ? transpose_equation(G, target, v, true) : model_equation(G, target, v, true);
          const auto lz = transposed ? transpose_equation(G, target, v, false) : model_equation(G, target, v, false);
          ASSERT_TRUE(std::holds_alternative<LazyEquation>(lz));
          EXPECT_THROW(monomial_count(lz), Error);
          for (int t = 0; t < 100; ++t) {
            const auto x = random_assignment(f, static_cast<std::size_t>(n), rng);
            EXPECT_EQ(evaluate(ex, x), evaluate(lz, x));
          }
        }
      }
    }
  }
}

TEST(Model, DegreeLaw) {
  Rng rng(77);
  const auto f = make_field(101);
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 3}}) {
    const auto G = random_code(f, n, k, rng).gen();
    for (const auto& pi : enumerate_pair_invariants(n, k, 4)) {
      const auto eq = model_equation(G, static_cast<value_type>(1 + rng.below(100)), pair_invariant(n, pi), true);
      const auto& p = std::get<SparsePoly>(eq);
      EXPECT_LE(p.total_degree(), static_cast<std::uint64_t>(2 * k));
      if (!p.is_zero()) {
        EXPECT_TRUE(p.is_homogeneous());
      }
    }
  }
}

TEST(Model, PermutationConstraintsGolden) {
  const auto f = make_field(5);
  const auto c = permutation_constraints(f, 2);
  ASSERT_EQ(c.size(), 6u);
  auto x = [&](std::size_t i, std::size_t j) { return SparsePoly::variable(f, 4, var_index(2, i, j)); };
  const auto one = SparsePoly::constant(f, 4, 1);
  EXPECT_EQ(c[0], x(1, 1) + x(1, 2) - one);
  EXPECT_EQ(c[1], x(2, 1) + x(2, 2) - one);
  EXPECT_EQ(c[2], x(1, 1) + x(2, 1) - one);
  EXPECT_EQ(c[3], x(1, 2) + x(2, 2) - one);
  EXPECT_EQ(c[4], x(1, 1) * x(2, 1));
  EXPECT_EQ(c[5], x(1, 2) * x(2, 2));
}

TEST(Model, ConstraintsCutOutPermutationsOverF2) {
  // Every 0/1 matrix satisfying the constraints is a permutation matrix.
  const auto f = make_field(2);
  const auto c = permutation_constraints(f, 3);
  std::size_t solutions = 0;
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    std::vector<value_type> x(9);
    for (std::size_t i = 0; i < 9; ++i) x[i] = (mask >> i) & 1u;
    bool ok = true;
    for (const auto& p : c) ok = ok && p.evaluate(x) == 0;
    solutions += ok;
  }
  EXPECT_EQ(solutions, 6u);
}

TEST(Model, BuildModelGolden) {
  const Example ex;
  const auto inst = ex.instance();
  const auto sys = build_model(inst, ModelOptions{1, true, false, false});
  ASSERT_EQ(sys.invariants_used.size(), 1u);
  EXPECT_EQ(sys.invariants_used[0].exponents, ev42(kV1));
  EXPECT_EQ(sys.invariants_used[0].forward_target, 2u);
  EXPECT_EQ(sys.equations.size(), 2u + permutation_constraints(ex.f, 4).size());
  EXPECT_EQ(sys.equations[0].tag, EquationTag::Forward);
  EXPECT_EQ(sys.equations[1].tag, EquationTag::Transposed);
  EXPECT_EQ(std::get<SparsePoly>(sys.equations[0].body).total_degree(), 4u);
  EXPECT_TRUE(verify_model(sys, ex.P).all_zero());

  const auto constraints_only = build_model(inst, ModelOptions{0, true, false, false});
  EXPECT_TRUE(constraints_only.invariants_used.empty());
  for (const auto& eq : constraints_only.equations) EXPECT_FALSE(eq.invariant.has_value());

  const auto with_field = build_model(inst, ModelOptions{1, false, false, true});
  EXPECT_EQ(with_field.equations.back().tag, EquationTag::FieldEquation);
  EXPECT_TRUE(verify_model(with_field, ex.P).all_zero());
}

TEST(Model, NoInvariantsForProjectiveSpace) {
  const auto inst = gen_instance(5, 4, 1, 3);
  try {
    build_model(inst, ModelOptions{1, true, false, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUsableInvariant);
  }
  EXPECT_NO_THROW(build_model(inst, ModelOptions{0, true, false, false}));
}

TEST(Model, MonomialCounts) {
  const auto f = make_field(5);
  EXPECT_EQ(monomial_count(Equation(SparsePoly(f, 4))), 0u);
}

TEST(Model, ExpansionGuard) {
  EXPECT_EQ(expansion_term_bound(4, 2), 2u * 256u);
  EXPECT_EQ(expansion_term_bound(7, 4), 2u * 5764801u);
  EXPECT_EQ(expansion_term_bound(6, 4), 2u * 1679616u);
  EXPECT_EQ(expansion_term_bound(252, 126), UINT64_MAX);
  const auto over = gen_instance(101, 7, 4, 1);
  try {
    build_model(over, ModelOptions{1, true, false, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExpansionRefused);
  }
  EXPECT_NO_THROW(build_model(over, ModelOptions{1, false, false, false}));
  const auto under = gen_instance(101, 6, 4, 1);
  EXPECT_NO_THROW(build_model(under, ModelOptions{1, true, false, false}));
}
