#include "lcegeom/grassmann.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace lcegeom {

namespace {

struct TermListLess {
  bool operator()(const std::vector<RelationTerm>& x, const std::vector<RelationTerm>& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const RelationTerm& s, const RelationTerm& t) {
                                          return std::tie(s.a, s.b, s.coeff) < std::tie(t.a, t.b, t.coeff);
                                        });
  }
};

}  // namespace

LinearCode::LinearCode(FqMatrix gen) : gen_(std::move(gen)) {
  if (gen_.rows() == 0 || gen_.rows() > gen_.cols()) {
    throw Error(ErrorKind::RankDeficient, "generator matrix must satisfy 1 <= k <= n");
  }
  if (rank(gen_) != gen_.rows()) {
    throw Error(ErrorKind::RankDeficient, "generator matrix does not have full row rank");
  }
}

PluckerVector::PluckerVector(PrimeField field, std::shared_ptr<const SubsetIndexer> indexer,
                             std::vector<value_type> coords)
    : field_(std::move(field)), indexer_(std::move(indexer)), coords_(std::move(coords)) {
  if (coords_.size() != indexer_->size()) {
    throw Error(ErrorKind::BadParams, "Plücker vector length does not match C(n,k)");
  }
  if (std::all_of(coords_.begin(), coords_.end(), [](value_type v) { return v == 0; })) {
    throw Error(ErrorKind::BadParams, "Plücker vector is identically zero");
  }
  for (auto& c : coords_) c %= field_.modulus();
}

bool projectively_equal(const PluckerVector& a, const PluckerVector& b) {
  if (!(a.field() == b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
  const auto& f = a.field();
  std::size_t lead = 0;
  while (a[lead] == 0) ++lead;
  if (b[lead] == 0) return false;
  const auto scale = f.div(b[lead], a[lead]);
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (f.mul(a[r], scale) != b[r]) return false;
  }
  return true;
}

PluckerVector plucker(const LinearCode& code) {
  auto idx = SubsetIndexer::shared(code.n(), code.k());
  const auto& f = code.field();
  const auto& g = code.gen();
  const std::size_t k = g.rows();
  std::vector<PrimeField::value_type> coords(idx->size());
  std::vector<PrimeField::value_type> block(k * k);
  for (std::size_t r = 0; r < idx->size(); ++r) {
    const auto& s = (*idx)[r];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) block[i * k + j] = g(i, static_cast<std::size_t>(s[j] - 1));
    coords[r] = det_value(f, block, k);
  }
  return PluckerVector(f, std::move(idx), std::move(coords));
}

std::vector<RelationDescriptor> plucker_relations(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::BadParams, "Plücker relations need 1 <= k <= n-1");
  }
  const auto idx = SubsetIndexer::shared(n, k);
  const SubsetIndexer lower(n, k - 1), upper(n, k + 1);
  std::vector<RelationDescriptor> out;
  std::set<std::vector<RelationTerm>, TermListLess> seen;
  for (const auto& I : lower.table()) {
    for (const auto& J : upper.table()) {
      std::map<std::pair<std::size_t, std::size_t>, int> acc;
      for (std::size_t l = 0; l < J.size(); ++l) {
        const int j = J[l];
        if (std::binary_search(I.begin(), I.end(), j)) continue;
        // (-1)^l with 1-based l, times the sign of moving j into sorted position.
        int sign = (l % 2 == 0) ? -1 : 1;
        const auto larger = std::count_if(I.begin(), I.end(), [j](int x) { return x > j; });
        if (larger % 2) sign = -sign;
        Subset A = I;
        A.insert(std::upper_bound(A.begin(), A.end(), j), j);
        Subset B;
        B.reserve(J.size() - 1);
        for (int x : J)
          if (x != j) B.push_back(x);
        auto ra = idx->rank(A), rb = idx->rank(B);
        if (ra > rb) std::swap(ra, rb);
        acc[{ra, rb}] += sign;
      }
      std::vector<RelationTerm> terms;
      for (const auto& [key, c] : acc)
        if (c != 0) terms.push_back({c, key.first, key.second});
      if (terms.size() <= 1) continue;
      if (terms.front().coeff < 0)
        for (auto& t : terms) t.coeff = -t.coeff;
      if (!seen.insert(terms).second) continue;
      out.push_back({I, J, std::move(terms)});
    }
  }
  return out;
}

PrimeField::value_type evaluate_relation(const RelationDescriptor& rel, const PrimeField& f,
                                         const std::vector<PrimeField::value_type>& coords) {
  PrimeField::value_type sum = 0;
  for (const auto& t : rel.terms) {
    const auto prod = f.mul(f.mul(coords[t.a], coords[t.b]), f.reduce(t.coeff));
    sum = f.add(sum, prod);
  }
  return sum;
}

bool on_grassmannian(const PluckerVector& p) {
  if (p.k() == 0 || p.k() == p.n()) return true;
  for (const auto& rel : plucker_relations(p.n(), p.k())) {
    if (evaluate_relation(rel, p.field(), p.coords()) != 0) return false;
  }
  return true;
}

LinearCode random_code(const PrimeField& field, int n, int k, Rng& rng) {
  if (k < 1 || k > n) throw Error(ErrorKind::BadParams, "random_code needs 1 <= k <= n");
  const auto kk = static_cast<std::size_t>(k), nn = static_cast<std::size_t>(n);
  for (;;) {
    FqMatrix g(field, kk, nn);
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = 0; j < nn; ++j) g(i, j) = static_cast<PrimeField::value_type>(rng.below(field.modulus()));
    if (rank(g) == kk) return LinearCode(std::move(g));
  }
}

LinearCode random_code(const PrimeField& field, int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  return random_code(field, n, k, rng);
}

}  // namespace lcegeom
