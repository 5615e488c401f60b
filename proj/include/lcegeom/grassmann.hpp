#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "lcegeom/field.hpp"
#include "lcegeom/matrix.hpp"
#include "lcegeom/rng.hpp"
#include "lcegeom/subsets.hpp"

namespace lcegeom {

/// An [n, k] linear code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  // RankDeficient unless the matrix has rank equal to its row count (>= 1).
  explicit LinearCode(FqMatrix gen);

  const PrimeField& field() const noexcept { return gen_.field(); }
  const FqMatrix& gen() const noexcept { return gen_; }
  int n() const noexcept { return static_cast<int>(gen_.cols()); }
  int k() const noexcept { return static_cast<int>(gen_.rows()); }

 private:
  FqMatrix gen_;
};

/// Affine Plücker coordinates: coords[r] is the minor on the r-th subset in
/// lexicographic order. Projective comparisons go through projectively_equal.
class PluckerVector {
 public:
  using value_type = PrimeField::value_type;

  // BadParams when every coordinate is zero or the length mismatches C(n,k).
  PluckerVector(PrimeField field, std::shared_ptr<const SubsetIndexer> indexer,
                std::vector<value_type> coords);

  const PrimeField& field() const noexcept { return field_; }
  const SubsetIndexer& indexer() const noexcept { return *indexer_; }
  const std::shared_ptr<const SubsetIndexer>& indexer_ptr() const noexcept { return indexer_; }
  int n() const noexcept { return indexer_->n(); }
  int k() const noexcept { return indexer_->k(); }
  std::size_t size() const noexcept { return coords_.size(); }

  const std::vector<value_type>& coords() const noexcept { return coords_; }
  value_type operator[](std::size_t r) const { return coords_[r]; }
  Fq at(const Subset& s) const { return Fq(field_, coords_[indexer_->rank(s)]); }

  friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
    return a.field_ == b.field_ && a.n() == b.n() && a.k() == b.k() && a.coords_ == b.coords_;
  }

 private:
  PrimeField field_;
  std::shared_ptr<const SubsetIndexer> indexer_;
  std::vector<value_type> coords_;
};

// Equal as points of projective space (one global nonzero scalar).
bool projectively_equal(const PluckerVector& a, const PluckerVector& b);

PluckerVector plucker(const LinearCode& code);

struct RelationTerm {
  int coeff;        // +-1 for every relation that survives deduplication
  std::size_t a;    // subset ranks, a <= b
  std::size_t b;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// One quadratic Plücker relation  sum_l (-1)^l p_{I+j_l} p_{J-j_l}, with
/// p_{I+j} read as the alternating coordinate (sign of sorting I+j).
struct RelationDescriptor {
  Subset I;  // (k-1)-subset
  Subset J;  // (k+1)-subset
  std::vector<RelationTerm> terms;  // canonical: sorted by (a, b), first coeff positive
};

// Nontrivial relations for Gr(k, n), deduplicated up to global sign.
std::vector<RelationDescriptor> plucker_relations(int n, int k);

PrimeField::value_type evaluate_relation(const RelationDescriptor& rel, const PrimeField& field,
                                         const std::vector<PrimeField::value_type>& coords);

bool on_grassmannian(const PluckerVector& p);

LinearCode random_code(const PrimeField& field, int n, int k, Rng& rng);
LinearCode random_code(const PrimeField& field, int n, int k, std::uint64_t seed);

}  // namespace lcegeom
