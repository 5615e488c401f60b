#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lcegeom/field.hpp"

namespace lcegeom {

struct VarPower {
  std::uint32_t var;
  std::uint32_t power;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Sparse exponent multi-index: (variable, power) pairs, variables increasing,
/// powers positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<VarPower> factors);  // sorts and merges
  static Monomial variable(std::uint32_t var) { return Monomial({{var, 1}}); }

  const std::vector<VarPower>& factors() const noexcept { return factors_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<VarPower> factors_;
  std::uint64_t degree_ = 0;
};

// Canonical term order: graded lexicographic with x_0 > x_1 > ...; larger
// monomials sort first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over F_q in `nvars` unknowns, no stored zero coefficients.
class SparsePoly {
 public:
  using value_type = PrimeField::value_type;
  using TermMap = std::map<Monomial, value_type, MonomialOrder>;

  SparsePoly(PrimeField field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static SparsePoly constant(const PrimeField& field, std::size_t nvars, std::int64_t c);
  static SparsePoly variable(const PrimeField& field, std::size_t nvars, std::uint32_t var);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t monomial_count() const noexcept { return terms_.size(); }

  // Adds c * m into the polynomial (BadIndex for out-of-range variables).
  void add_term(const Monomial& m, value_type c);

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;
  value_type evaluate(std::span<const value_type> point) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator+(const SparsePoly& o) const { return SparsePoly(*this) += o; }
  SparsePoly operator-(const SparsePoly& o) const { return SparsePoly(*this) -= o; }
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(value_type c) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& o) const;

  PrimeField field_;
  std::size_t nvars_;
  TermMap terms_;
};

// Human-readable rendering with x_{ij} names for an n x n grid of unknowns.
std::string format_poly(const SparsePoly& p, std::size_t grid_n);

}  // namespace lcegeom
