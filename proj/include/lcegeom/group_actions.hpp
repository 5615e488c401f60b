#pragma once

#include <optional>
#include <vector>

#include "lcegeom/field.hpp"
#include "lcegeom/grassmann.hpp"
#include "lcegeom/matrix.hpp"

namespace lcegeom {

/// Invertible diagonal matrix diag(lambda_1, ..., lambda_n).
class DiagonalElement {
 public:
  using value_type = PrimeField::value_type;

  // BadParams if any entry is zero mod q.
  DiagonalElement(const PrimeField& field, std::vector<std::int64_t> entries);
  static DiagonalElement ones(const PrimeField& field, std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<value_type>& entries() const noexcept { return entries_; }
  value_type operator[](std::size_t i) const { return entries_[i]; }

  FqMatrix matrix(const PrimeField& field) const;

  friend bool operator==(const DiagonalElement&, const DiagonalElement&) = default;

 private:
  DiagonalElement() = default;
  std::vector<value_type> entries_;
};

/// Permutation of {1..n} with matrix view P[k][j] = 1 iff j = images[k].
/// Right multiplication G * P moves column k of G to column images[k].
class Permutation {
 public:
  // BadParams unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

  Permutation inverse() const;
  FqMatrix matrix(const PrimeField& field) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Matrix product: (a * b).matrix() == a.matrix() * b.matrix().
Permutation operator*(const Permutation& a, const Permutation& b);

/// Monomial matrix Q = D * P.
struct MonomialElement {
  DiagonalElement diag;
  Permutation perm;

  FqMatrix matrix(const PrimeField& field) const;
};

LinearCode act_diagonal(const DiagonalElement& lambda, const LinearCode& code);
LinearCode act_permutation(const Permutation& perm, const LinearCode& code);
LinearCode act_monomial(const MonomialElement& q, const LinearCode& code);
PluckerVector act_diagonal_plucker(const DiagonalElement& lambda, const PluckerVector& p);

// Column permutation of a raw matrix: returns m * P.
FqMatrix permute_columns(const FqMatrix& m, const Permutation& perm);
FqMatrix scale_columns(const FqMatrix& m, const DiagonalElement& lambda);

struct DiagonalClassResult {
  std::optional<DiagonalElement> witness;  // empty: NotEquivalent
  bool heuristic = false;                  // NotEquivalent without a definitive argument

  explicit operator bool() const noexcept { return witness.has_value(); }
};

/// Finds lambda with rowspace(a * diag(lambda)) == rowspace(b).
///
/// Zero patterns of the Plücker vectors must agree. On the common support the
/// coordinate ratios satisfy p_I(b)/p_I(a) = c * prod_{i in I} lambda_i, which
/// becomes a linear system modulo q-1 after taking discrete logs (one unknown
/// per column plus one for the scalar c). Every candidate is checked by RREF
/// comparison before it is returned. Witnesses are scaled so lambda_1 = 1
/// whenever column 1 of `a` is nonzero.
DiagonalClassResult same_diagonal_class(const LinearCode& a, const LinearCode& b);

// Class representative RREF(G * P).
LinearCode quotient_act(const Permutation& perm, const LinearCode& code);

}  // namespace lcegeom
