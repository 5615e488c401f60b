#include "lcegeom/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "lcegeom/rng.hpp"

namespace lcegeom {

namespace {

using value_type = PrimeField::value_type;

void require_proper(int n, int k, const char* what) {
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::BadParams, std::string(what) + " needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
  }
}

// Incremental row echelon basis over a prime field.
class RowSpace {
 public:
  RowSpace(const PrimeField& f, std::size_t width) : f_(f), width_(width) {}

  // Adds the row if it is independent of the current span.
  bool insert(std::vector<value_type> row) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const auto c = row[pivots_[b]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] = f_.sub(row[j], f_.mul(c, basis_[b][j]));
    }
    std::size_t p = 0;
    while (p < width_ && row[p] == 0) ++p;
    if (p == width_) return false;
    const auto s = f_.inv(row[p]);
    for (auto& x : row) x = f_.mul(x, s);
    // Keep the basis fully reduced so that one pass above suffices.
    for (auto& other : basis_) {
      const auto c = other[p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) other[j] = f_.sub(other[j], f_.mul(c, row[j]));
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  const PrimeField& f_;
  std::size_t width_;
  std::vector<std::vector<value_type>> basis_;
  std::vector<std::size_t> pivots_;
};

const PrimeField& jacobian_field() {
  static const PrimeField f(PrimeField::kJacobianPrime);
  return f;
}

// Random point of Gr(k,n) whose coordinates on `required` are nonzero.
std::optional<PluckerVector> sample_point(int n, int k, const std::vector<bool>& required, int trials, Rng& rng) {
  const auto& f = jacobian_field();
  for (int t = 0; t < trials; ++t) {
    const auto p = plucker(random_code(f, n, k, rng));
    bool ok = true;
    for (std::size_t r = 0; r < p.size() && ok; ++r) ok = !required[r] || p[r] != 0;
    if (ok) return p;
  }
  return std::nullopt;
}

std::vector<std::vector<value_type>> relation_rows(const std::vector<RelationDescriptor>& rels, const PluckerVector& p) {
  const auto& f = p.field();
  std::vector<std::vector<value_type>> rows;
  rows.reserve(rels.size());
  for (const auto& rel : rels) {
    std::vector<value_type> d(p.size(), 0);
    for (const auto& t : rel.terms) {
      const auto c = f.reduce(t.coeff);
      d[t.a] = f.add(d[t.a], f.mul(c, p[t.b]));
      d[t.b] = f.add(d[t.b], f.mul(c, p[t.a]));
    }
    rows.push_back(std::move(d));
  }
  return rows;
}

}  // namespace

ExponentVector::ExponentVector(std::shared_ptr<const SubsetIndexer> indexer, std::vector<std::int64_t> exps)
    : indexer_(std::move(indexer)), exps_(std::move(exps)) {
  if (exps_.size() != indexer_->size()) throw Error(ErrorKind::BadParams, "exponent vector length mismatch");
  std::vector<std::int64_t> column_sums(static_cast<std::size_t>(indexer_->n()), 0);
  for (std::size_t r = 0; r < exps_.size(); ++r) {
    if (exps_[r] == 0) continue;
    for (int i : (*indexer_)[r]) column_sums[static_cast<std::size_t>(i - 1)] += exps_[r];
  }
  if (std::any_of(column_sums.begin(), column_sums.end(), [](std::int64_t s) { return s != 0; })) {
    throw Error(ErrorKind::BadParams, "exponent vector is not in the left kernel of W");
  }
}

bool ExponentVector::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t ExponentVector::numerator_degree() const {
  std::int64_t d = 0;
  for (auto e : exps_) d += std::max<std::int64_t>(e, 0);
  return d;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "exponent vectors differ in length");
  auto e = exps_;
  for (std::size_t r = 0; r < e.size(); ++r) e[r] += o.exps_[r];
  return ExponentVector(indexer_, std::move(e));
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const { return *this + o * -1; }

ExponentVector ExponentVector::operator*(std::int64_t m) const {
  auto e = exps_;
  for (auto& x : e) x *= m;
  return ExponentVector(indexer_, std::move(e));
}

std::string format_laurent(const ExponentVector& v) {
  const bool compact = v.n() < 10;
  auto render = [&](int sign) {
    std::string s;
    for (std::size_t r = 0; r < v.size(); ++r) {
      const auto e = v[r] * sign;
      if (e <= 0) continue;
      s += "p" + (compact ? format_subset(v.indexer()[r], true) : format_subset(v.indexer()[r]));
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  };
  std::string num = render(1), den = render(-1);
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/(" + den + ")";
}

IntMatrix build_W(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::BadParams, "build_W needs 1 <= k <= n");
  const auto idx = SubsetIndexer::shared(n, k);
  IntMatrix w(idx->size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < idx->size(); ++r)
    for (int i : (*idx)[r]) w(r, static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

std::vector<ExponentVector> kernel_invariants(int n, int k) {
  require_proper(n, k, "kernel_invariants");
  const auto idx = SubsetIndexer::shared(n, k);
  std::vector<ExponentVector> out;
  for (const auto& row : int_left_kernel(build_W(n, k))) {
    std::vector<std::int64_t> e(row.size());
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (abs(row[r]) > std::numeric_limits<std::int64_t>::max()) {
        throw Error(ErrorKind::BadParams, "kernel exponent exceeds 64 bits");
      }
      e[r] = static_cast<std::int64_t>(row[r]);
    }
    out.emplace_back(idx, std::move(e));
  }
  return out;
}

std::optional<value_type> laurent_eval(const ExponentVector& v, const PluckerVector& p) {
  if (v.n() != p.n() || v.k() != p.k()) throw Error(ErrorKind::DimensionMismatch, "invariant/point shape");
  const auto& f = p.field();
  value_type acc = 1;
  bool zero = false;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto e = v[r];
    if (e == 0) continue;
    if (p[r] == 0) {
      if (e < 0) return std::nullopt;
      zero = true;
      continue;
    }
    acc = f.mul(acc, f.pow_signed(p[r], e));
  }
  return zero ? 0 : acc;
}

ExponentVector pair_invariant(int n, const PairInvariant& pi) {
  const int k = static_cast<int>(pi.I1.size());
  auto merged = [](Subset a, const Subset& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  if (pi.J1.size() != pi.I1.size() || pi.I2.size() != pi.I1.size() || pi.J2.size() != pi.I1.size()) {
    throw Error(ErrorKind::MultisetMismatch, "subsets differ in size");
  }
  if (merged(pi.I1, pi.J1) != merged(pi.I2, pi.J2)) {
    throw Error(ErrorKind::MultisetMismatch, "I1+J1 and I2+J2 differ as multisets");
  }
  const auto idx = SubsetIndexer::shared(n, k);
  std::vector<std::int64_t> e(idx->size(), 0);
  ++e[idx->rank(pi.I1)];
  ++e[idx->rank(pi.J1)];
  --e[idx->rank(pi.I2)];
  --e[idx->rank(pi.J2)];
  ExponentVector v(idx, std::move(e));
  if (v.is_zero()) throw Error(ErrorKind::BadParams, "trivial pair invariant");
  return v;
}

std::vector<PairInvariant> enumerate_pair_invariants(int n, int k, std::size_t limit) {
  require_proper(n, k, "enumerate_pair_invariants");
  const auto idx = SubsetIndexer::shared(n, k);
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t a = 0; a < idx->size(); ++a) {
    for (std::size_t b = a; b < idx->size(); ++b) {
      std::vector<int> key = (*idx)[a];
      key.insert(key.end(), (*idx)[b].begin(), (*idx)[b].end());
      std::sort(key.begin(), key.end());
      groups[std::move(key)].emplace_back(a, b);
    }
  }
  std::vector<PairInvariant> out;
  // Within a multiset group the last pairing is the first denominator, so
  // Gr(2,4) yields p12p34/(p14p23) and p13p24/(p14p23) before their quotient.
  for (const auto& [key, pairs] : groups) {
    for (std::size_t y = pairs.size(); y-- > 1;) {
      for (std::size_t x = 0; x < y; ++x) {
        if (out.size() >= limit) return out;
        out.push_back({(*idx)[pairs[x].first], (*idx)[pairs[x].second], (*idx)[pairs[y].first],
                       (*idx)[pairs[y].second]});
      }
    }
  }
  return out;
}

std::int64_t predicted_invariant_count(int n, int k) {
  return static_cast<std::int64_t>(k) * (n - k) - n + 1;
}

std::size_t relation_rank_at_random_point(int n, int k, std::uint64_t seed) {
  require_proper(n, k, "relation_rank_at_random_point");
  Rng rng(seed);
  const auto p = plucker(random_code(jacobian_field(), n, k, rng));
  RowSpace space(jacobian_field(), p.size());
  for (auto& row : relation_rows(plucker_relations(n, k), p)) space.insert(std::move(row));
  return space.rank();
}

JacobianSelection jacobian_select(const std::vector<ExponentVector>& candidates, int n, int k, int trials,
                                  std::uint64_t seed) {
  JacobianSelection out;
  if (candidates.empty()) return out;
  require_proper(n, k, "jacobian_select");
  const auto& f = jacobian_field();
  const auto rels = plucker_relations(n, k);
  const std::size_t width = candidates.front().size();
  std::vector<bool> required(width, false);
  for (const auto& v : candidates) {
    if (v.n() != n || v.k() != k) throw Error(ErrorKind::DimensionMismatch, "candidate shape");
    for (std::size_t r = 0; r < width; ++r) required[r] = required[r] || v[r] != 0;
  }

  Rng rng(seed);
  constexpr int kPoints = 3;
  for (int point = 0; point < kPoints; ++point) {
    const auto p = sample_point(n, k, required, trials, rng);
    if (!p) {
      throw Error(ErrorKind::SamplingExhausted,
                  "no point with nonzero candidate coordinates after " + std::to_string(trials) + " tries");
    }
    RowSpace space(f, width);
    for (auto& row : relation_rows(rels, *p)) space.insert(std::move(row));
    if (point == 0) out.relation_rank = space.rank();
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::vector<value_type> row(width, 0);
      for (std::size_t r = 0; r < width; ++r) {
        if (candidates[c][r] != 0) row[r] = f.div(f.reduce(candidates[c][r]), (*p)[r]);
      }
      if (space.insert(std::move(row))) kept.push_back(c);
    }
    out.per_point.push_back(std::move(kept));
  }

  const auto& pts = out.per_point;
  std::size_t winner = 0;
  bool majority = false;
  for (std::size_t i = 0; i < pts.size() && !majority; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        winner = i;
        majority = true;
        break;
      }
    }
  }
  if (!majority) {
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].size() > pts[winner].size()) winner = i;
  }
  out.indices = pts[winner];
  for (auto c : out.indices) out.selected.push_back(candidates[c]);
  return out;
}

std::vector<ExponentVector> invgen(int n, int k, std::uint64_t seed) {
  return jacobian_select(kernel_invariants(n, k), n, k, kDefaultJacobianTrials, seed).selected;
}

}  // namespace lcegeom
