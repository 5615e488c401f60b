#include "lcegeom/subsets.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace lcegeom {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

SubsetIndexer::SubsetIndexer(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorKind::BadParams, "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const auto count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (count > kMaxTableSize) {
    throw Error(ErrorKind::BadParams, "C(n,k) = " + std::to_string(count) + " subsets is too many to tabulate");
  }
  table_.reserve(count);
  Subset cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    table_.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::shared_ptr<const SubsetIndexer> SubsetIndexer::shared(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SubsetIndexer>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_shared<const SubsetIndexer>(n, k);
  return slot;
}

std::size_t SubsetIndexer::rank(const Subset& s) const {
  if (s.size() != static_cast<std::size_t>(k_)) throw Error(ErrorKind::BadIndex, "subset has wrong size");
  std::uint64_t r = 0;
  int prev = 0;
  for (int i = 0; i < k_; ++i) {
    const int a = s[static_cast<std::size_t>(i)];
    if (a <= prev || a > n_) throw Error(ErrorKind::BadIndex, "subset must be increasing within [1, n]");
    // Subsets whose i-th element is x in (prev, a) all precede s.
    for (int x = prev + 1; x < a; ++x) {
      r += binomial(static_cast<std::uint64_t>(n_ - x), static_cast<std::uint64_t>(k_ - i - 1));
    }
    prev = a;
  }
  return static_cast<std::size_t>(r);
}

std::string format_subset(const Subset& s, bool compact) {
  std::string out;
  if (compact) {
    for (int x : s) out += std::to_string(x);
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace lcegeom
