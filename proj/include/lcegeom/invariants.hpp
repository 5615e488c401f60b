#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcegeom/grassmann.hpp"
#include "lcegeom/integer_matrix.hpp"
#include "lcegeom/subsets.hpp"

namespace lcegeom {

/// Exponent vector v of the Laurent monomial f_v = prod_I p_I^{v_I}; always a
/// member of the integer left kernel of W_{k,n}, which is exactly the
/// condition for f_v to be invariant under the diagonal action.
class ExponentVector {
 public:
  // BadParams when the length is wrong or v * W_{k,n} != 0.
  ExponentVector(std::shared_ptr<const SubsetIndexer> indexer, std::vector<std::int64_t> exps);

  const SubsetIndexer& indexer() const noexcept { return *indexer_; }
  const std::shared_ptr<const SubsetIndexer>& indexer_ptr() const noexcept { return indexer_; }
  int n() const noexcept { return indexer_->n(); }
  int k() const noexcept { return indexer_->k(); }
  std::size_t size() const noexcept { return exps_.size(); }
  const std::vector<std::int64_t>& exps() const noexcept { return exps_; }
  std::int64_t operator[](std::size_t r) const { return exps_[r]; }

  bool is_zero() const;
  // Sum of positive exponents (equal to the sum of negative ones' magnitudes).
  std::int64_t numerator_degree() const;

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector operator*(std::int64_t m) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.n() == b.n() && a.k() == b.k() && a.exps_ == b.exps_;
  }

 private:
  std::shared_ptr<const SubsetIndexer> indexer_;
  std::vector<std::int64_t> exps_;
};

// "p12p34/(p14p23)" style rendering.
std::string format_laurent(const ExponentVector& v);

/// Degree-2 invariant p_{I1} p_{J1} / (p_{I2} p_{J2}) with I1+J1 == I2+J2 as multisets.
struct PairInvariant {
  Subset I1, J1, I2, J2;
  friend bool operator==(const PairInvariant&, const PairInvariant&) = default;
};

// Incidence matrix: row r is the indicator of the r-th k-subset.
IntMatrix build_W(int n, int k);

// Z-basis of the left kernel of W_{k,n}, in HNF.
std::vector<ExponentVector> kernel_invariants(int n, int k);

// Value of f_v at p; nullopt when a zero coordinate carries a negative exponent.
std::optional<PrimeField::value_type> laurent_eval(const ExponentVector& v, const PluckerVector& p);

// MultisetMismatch unless I1+J1 == I2+J2; BadParams for the trivial pairing.
ExponentVector pair_invariant(int n, const PairInvariant& pi);

std::vector<PairInvariant> enumerate_pair_invariants(int n, int k, std::size_t limit = SIZE_MAX);

// k(n-k) - n + 1, the transcendence degree of the invariant field.
std::int64_t predicted_invariant_count(int n, int k);

inline constexpr std::uint64_t kDefaultJacobianSeed = 20240607;
inline constexpr int kDefaultJacobianTrials = 64;

struct JacobianSelection {
  std::vector<std::size_t> indices;  // positions in the candidate list, increasing
  std::vector<ExponentVector> selected;
  std::size_t relation_rank = 0;     // t: rank of the relation differentials
  std::vector<std::vector<std::size_t>> per_point;  // greedy outcome at each point
};

/// Greedy Jacobian-criterion selection. Each of the three evaluation points is
/// a random point of Gr(k,n) over F_{2^31-1} with every coordinate used by a
/// candidate nonzero. Rows: relation differentials first, then the
/// logarithmic differential v_r / p_r of each candidate; a candidate is kept
/// when it raises the rank. The selection reached by at least two points is
/// returned, otherwise the largest one.
JacobianSelection jacobian_select(const std::vector<ExponentVector>& candidates, int n, int k,
                                  int trials = kDefaultJacobianTrials,
                                  std::uint64_t seed = kDefaultJacobianSeed);

// Relation-row rank t at one random point (no candidates).
std::size_t relation_rank_at_random_point(int n, int k, std::uint64_t seed = kDefaultJacobianSeed);

std::vector<ExponentVector> invgen(int n, int k, std::uint64_t seed = kDefaultJacobianSeed);

}  // namespace lcegeom
