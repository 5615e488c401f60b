#include "lcegeom/group_actions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcegeom/integer_matrix.hpp"

namespace lcegeom {

namespace {

void require_length(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has length " + std::to_string(got) +
                                                  ", code length is " + std::to_string(n));
  }
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) { return rref(a).matrix == rref(b).matrix; }

constexpr double kExhaustiveLimit = 1 << 20;

std::optional<DiagonalElement> exhaustive_witness(const LinearCode& a, const LinearCode& b) {
  const auto& f = a.field();
  const std::size_t n = static_cast<std::size_t>(a.n());
  const auto target = rref(b.gen()).matrix;
  std::vector<std::int64_t> lam(n, 1);
  // lambda_1 fixed to 1: a global scalar never changes the row space.
  for (;;) {
    DiagonalElement d(f, lam);
    if (rref(scale_columns(a.gen(), d)).matrix == target) return d;
    std::size_t i = 1;
    while (i < n && lam[i] == static_cast<std::int64_t>(f.modulus() - 1)) lam[i++] = 1;
    if (i >= n) return std::nullopt;
    ++lam[i];
  }
}

DiagonalElement normalized(const PrimeField& f, const FqMatrix& gen, std::vector<std::int64_t> lam) {
  bool first_column_used = false;
  for (std::size_t i = 0; i < gen.rows(); ++i) first_column_used |= gen(i, 0) != 0;
  if (first_column_used) {
    const auto s = f.inv(static_cast<PrimeField::value_type>(lam[0]));
    for (auto& x : lam) x = f.mul(static_cast<PrimeField::value_type>(x), s);
  }
  return DiagonalElement(f, std::move(lam));
}

}  // namespace

DiagonalElement::DiagonalElement(const PrimeField& field, std::vector<std::int64_t> entries) {
  entries_.reserve(entries.size());
  for (auto e : entries) {
    const auto v = field.reduce(e);
    if (v == 0) throw Error(ErrorKind::BadParams, "diagonal entries must be nonzero");
    entries_.push_back(v);
  }
}

DiagonalElement DiagonalElement::ones(const PrimeField& field, std::size_t n) {
  return DiagonalElement(field, std::vector<std::int64_t>(n, 1));
}

FqMatrix DiagonalElement::matrix(const PrimeField& field) const {
  FqMatrix m(field, size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = entries_[i];
  return m;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || static_cast<std::size_t>(x) > images_.size() || hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::BadParams, "images do not form a permutation of 1..n");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(i + 1);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (std::size_t k = 0; k < size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

FqMatrix Permutation::matrix(const PrimeField& field) const {
  FqMatrix m(field, size(), size());
  for (std::size_t k = 0; k < size(); ++k) m(k, static_cast<std::size_t>(images_[k] - 1)) = 1;
  return m;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<int> im(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) im[k] = b(a.images()[k]);
  return Permutation(std::move(im));
}

FqMatrix MonomialElement::matrix(const PrimeField& field) const {
  return diag.matrix(field) * perm.matrix(field);
}

FqMatrix permute_columns(const FqMatrix& m, const Permutation& perm) {
  if (perm.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "permutation size");
  FqMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    const auto dst = static_cast<std::size_t>(perm.images()[k] - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, dst) = m(i, k);
  }
  return out;
}

FqMatrix scale_columns(const FqMatrix& m, const DiagonalElement& lambda) {
  if (lambda.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "diagonal size");
  const auto& f = m.field();
  FqMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.mul(m(i, j), lambda[j]);
  return out;
}

LinearCode act_diagonal(const DiagonalElement& lambda, const LinearCode& code) {
  require_length(lambda.size(), code.n(), "diagonal");
  return LinearCode(scale_columns(code.gen(), lambda));
}

LinearCode act_permutation(const Permutation& perm, const LinearCode& code) {
  require_length(perm.size(), code.n(), "permutation");
  return LinearCode(permute_columns(code.gen(), perm));
}

LinearCode act_monomial(const MonomialElement& q, const LinearCode& code) {
  return act_permutation(q.perm, act_diagonal(q.diag, code));
}

PluckerVector act_diagonal_plucker(const DiagonalElement& lambda, const PluckerVector& p) {
  require_length(lambda.size(), p.n(), "diagonal");
  const auto& f = p.field();
  std::vector<PrimeField::value_type> out(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) {
    PrimeField::value_type s = p[r];
    for (int i : p.indexer()[r]) s = f.mul(s, lambda[static_cast<std::size_t>(i - 1)]);
    out[r] = s;
  }
  return PluckerVector(f, p.indexer_ptr(), std::move(out));
}

DiagonalClassResult same_diagonal_class(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field()) || a.n() != b.n() || a.k() != b.k()) {
    throw Error(ErrorKind::DimensionMismatch, "codes differ in field, length or dimension");
  }
  const auto& f = a.field();
  const std::size_t n = static_cast<std::size_t>(a.n());
  if (f.modulus() == 2) {
    if (same_row_space(a.gen(), b.gen())) return {DiagonalElement::ones(f, n)};
    return {};
  }

  const auto pa = plucker(a);
  const auto pb = plucker(b);
  std::vector<std::size_t> support;
  for (std::size_t r = 0; r < pa.size(); ++r) {
    if ((pa[r] == 0) != (pb[r] == 0)) return {};
    if (pa[r] != 0) support.push_back(r);
  }

  // Normalize at the first common nonzero coordinate; the scalar unknown
  // absorbs what normalization leaves over.
  const auto base = f.div(pb[support.front()], pa[support.front()]);
  IntMatrix system(support.size(), n + 1);
  IntVector rhs(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    const std::size_t r = support[s];
    for (int i : pa.indexer()[r]) system(s, static_cast<std::size_t>(i - 1)) = 1;
    system(s, n) = 1;
    const auto ratio = f.div(f.div(pb[r], pa[r]), base);
    rhs[s] = static_cast<std::uint64_t>(f.dlog(ratio));
  }

  if (auto x = solve_mod(system, rhs, BigInt(f.modulus() - 1))) {
    std::vector<std::int64_t> lam(n);
    for (std::size_t t = 0; t < n; ++t) lam[t] = f.pow(f.generator(), static_cast<std::uint64_t>((*x)[t]));
    auto cand = normalized(f, a.gen(), std::move(lam));
    if (same_row_space(scale_columns(a.gen(), cand), b.gen())) return {std::move(cand)};
  }

  if (std::pow(static_cast<double>(f.modulus() - 1), static_cast<double>(n)) <= kExhaustiveLimit) {
    if (auto w = exhaustive_witness(a, b)) {
      std::vector<std::int64_t> lam(w->entries().begin(), w->entries().end());
      return {normalized(f, a.gen(), std::move(lam))};
    }
    return {};
  }
  return {std::nullopt, true};
}

LinearCode quotient_act(const Permutation& perm, const LinearCode& code) {
  require_length(perm.size(), code.n(), "permutation");
  return LinearCode(rref(permute_columns(code.gen(), perm)).matrix);
}

}  // namespace lcegeom
