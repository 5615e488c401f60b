#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lcegeom/matrix.hpp"

namespace lcegeom {

// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All k-subsets of {1..n} in lexicographic order, with O(k) ranking.
class SubsetIndexer {
 public:
  // Refuses tables with more than this many subsets.
  static constexpr std::uint64_t kMaxTableSize = 5'000'000;

  SubsetIndexer(int n, int k);

  // Process-wide cache of immutable indexers.
  static std::shared_ptr<const SubsetIndexer> shared(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return table_.size(); }

  const Subset& operator[](std::size_t r) const { return table_[r]; }
  const std::vector<Subset>& table() const noexcept { return table_; }

  // BadIndex unless `s` is an increasing k-subset of [n].
  std::size_t rank(const Subset& s) const;

 private:
  int n_;
  int k_;
  std::vector<Subset> table_;
};

// "{1,3}"-style rendering; compact "13" when n < 10 and `compact` is set.
std::string format_subset(const Subset& s, bool compact = false);

}  // namespace lcegeom
