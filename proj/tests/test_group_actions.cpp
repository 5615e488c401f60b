#include <gtest/gtest.h>

#include "lcegeom/group_actions.hpp"
#include "lcegeom/rng.hpp"
#include "oracles.hpp"

using namespace lcegeom;

namespace {

oracle::Mat to_rows(const FqMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

DiagonalElement random_diag(const PrimeField& f, std::size_t n, Rng& rng) {
  std::vector<std::int64_t> d(n);
  for (auto& x : d) x = static_cast<std::int64_t>(1 + rng.below(f.modulus() - 1));
  return DiagonalElement(f, d);
}

Permutation random_perm(std::size_t n, Rng& rng) {
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(i + 1);
  for (std::size_t i = n; i > 1; --i) std::swap(im[i - 1], im[rng.below(i)]);
  return Permutation(im);
}

const std::vector<int> kSecretP{3, 1, 4, 2};

}  // namespace

TEST(GroupActions, PermutationGolden) {
  const auto f = make_field(5);
  const LinearCode g1(FqMatrix(f, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  const Permutation p(kSecretP);
  EXPECT_EQ(act_permutation(p, g1).gen(), FqMatrix(f, {{0, 1, 1, 1}, {1, 2, 0, 1}}));
  EXPECT_EQ(act_permutation(Permutation::identity(4), g1).gen(), g1.gen());
  EXPECT_EQ(act_permutation(p.inverse(), act_permutation(p, g1)).gen(), g1.gen());
  EXPECT_EQ(quotient_act(p, g1).gen(), FqMatrix(f, {{1, 0, 3, 4}, {0, 1, 1, 1}}));
  EXPECT_EQ(quotient_act(Permutation::identity(4), g1).gen(), rref(g1.gen()).matrix);
  EXPECT_EQ(p.matrix(f) * p.inverse().matrix(f), FqMatrix::identity(f, 4));
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
}

TEST(GroupActions, DiagonalGolden) {
  const auto f = make_field(5);
  const FqMatrix g1(f, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  const DiagonalElement d(f, {1, 3, 4, 2});
  const Permutation p(kSecretP);
  EXPECT_EQ(g1 * d.matrix(f) * p.matrix(f), FqMatrix(f, {{0, 2, 1, 4}, {3, 4, 0, 4}}));
  EXPECT_EQ(act_diagonal(DiagonalElement::ones(f, 4), LinearCode(g1)).gen(), g1);
  const FqMatrix sparse(f, {{1, 0, 2, 0}, {0, 1, 3, 0}});
  EXPECT_EQ(act_diagonal(DiagonalElement(f, {1, 1, 1, 4}), LinearCode(sparse)).gen(), sparse);
  EXPECT_THROW(DiagonalElement(f, {1, 0, 2}), Error);
  EXPECT_THROW(act_diagonal(DiagonalElement(f, {1, 2}), LinearCode(g1)), Error);
}

TEST(GroupActions, MonomialConvention) {
  // Q = D * P: scale first, then move column k to images[k].
  const auto f = make_field(7);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_code(f, 5, 2, rng);
    const auto d = random_diag(f, 5, rng);
    const auto p = random_perm(5, rng);
    const MonomialElement q{d, p};
    EXPECT_EQ(act_monomial(q, c).gen(), c.gen() * q.matrix(f));
    EXPECT_EQ(act_monomial(q, c).gen(), act_permutation(p, act_diagonal(d, c)).gen());
    EXPECT_EQ(to_rows(permute_columns(c.gen(), p)), oracle::permute_columns(to_rows(c.gen()), p.images()));
  }
}

TEST(GroupActions, PermutationCompositionMatchesMatrices) {
  const auto f = make_field(3);
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_perm(6, rng), b = random_perm(6, rng);
    EXPECT_EQ((a * b).matrix(f), a.matrix(f) * b.matrix(f));
    EXPECT_EQ(a * a.inverse(), Permutation::identity(6));
  }
}

TEST(GroupActions, DiagonalActionOnPlucker) {
  const auto f = make_field(5);
  const auto p = plucker(LinearCode(FqMatrix(f, {{1, 0, 1, 2}, {0, 1, 3, 2}})));
  EXPECT_EQ(act_diagonal_plucker(DiagonalElement::ones(f, 4), p), p);
  const auto scaled = act_diagonal_plucker(DiagonalElement(f, {3, 3, 3, 3}), p);
  for (std::size_t r = 0; r < p.size(); ++r) EXPECT_EQ(scaled[r], f.mul(p[r], 9 % 5));
}

TEST(GroupActions, PluckerEquivariance) {
  Rng rng(12);
  for (std::uint64_t q : {5ull, 101ull}) {
    const auto f = make_field(q);
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
      for (int t = 0; t < 40; ++t) {
        const auto c = random_code(f, n, k, rng);
        const auto d = random_diag(f, static_cast<std::size_t>(n), rng);
        EXPECT_EQ(plucker(act_diagonal(d, c)), act_diagonal_plucker(d, plucker(c)));
      }
    }
  }
}

TEST(GroupActions, SameDiagonalClassGolden) {
  const auto f = make_field(5);
  const LinearCode g1(FqMatrix(f, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  const LinearCode g2(FqMatrix(f, {{1, 0, 1, 2}, {0, 1, 3, 2}}));
  const Permutation p(kSecretP);
  const auto g1p = act_permutation(p, g1);

  const auto self = same_diagonal_class(g1, g1);
  ASSERT_TRUE(self);
  EXPECT_EQ(rref(act_diagonal(*self.witness, g1).gen()).matrix, rref(g1.gen()).matrix);

  // (3,2,1,4) is one valid witness; any returned witness must verify.
  EXPECT_EQ(rref(act_diagonal(DiagonalElement(f, {3, 2, 1, 4}), g1p).gen()).matrix, g2.gen());
  const auto w = same_diagonal_class(g1p, g2);
  ASSERT_TRUE(w);
  EXPECT_EQ(rref(act_diagonal(*w.witness, g1p).gen()).matrix, g2.gen());
  EXPECT_EQ((*w.witness)[0], 1u);

  // G1 and G2 themselves are diagonally equivalent: diag(1,2,1,2) maps one to the other.
  EXPECT_EQ(rref(act_diagonal(DiagonalElement(f, {1, 2, 1, 2}), g1).gen()).matrix, g2.gen());
  const auto direct = same_diagonal_class(g1, g2);
  ASSERT_TRUE(direct);
  EXPECT_EQ(rref(act_diagonal(*direct.witness, g1).gen()).matrix, g2.gen());
}

TEST(GroupActions, SameDiagonalClassAgreesWithExhaustiveSearch) {
  Rng rng(99);
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    const auto f = make_field(q);
    for (auto [n, k] : {std::pair{3, 1}, {4, 2}, {5, 2}, {4, 3}}) {
      for (int t = 0; t < 12; ++t) {
        const auto a = random_code(f, n, k, rng);
        // Half the pairs are related by construction.
        const auto b = (t % 2) ? act_diagonal(random_diag(f, static_cast<std::size_t>(n), rng), a)
                               : random_code(f, n, k, rng);
        const auto expected = oracle::diagonal_witness(to_rows(a.gen()), to_rows(b.gen()), static_cast<std::int64_t>(q));
        const auto got = same_diagonal_class(a, b);
        EXPECT_EQ(static_cast<bool>(got), expected.has_value()) << "q=" << q << " n=" << n << " k=" << k;
        if (got) {
          EXPECT_EQ(rref(act_diagonal(*got.witness, a).gen()).matrix, rref(b.gen()).matrix);
        }
      }
    }
  }
}
