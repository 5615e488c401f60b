#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "lcegeom/instance.hpp"
#include "lcegeom/invariants.hpp"
#include "lcegeom/polynomial.hpp"

namespace lcegeom {

// Unknown x_{ij} (1-based) lives at index (i-1)*n + (j-1).
constexpr std::uint32_t var_index(std::size_t n, std::size_t i, std::size_t j) {
  return static_cast<std::uint32_t>((i - 1) * n + (j - 1));
}

/// k x n grid of linear forms G * X (or G * X^T).
struct LinearFormMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparsePoly> entries;  // row-major

  const SparsePoly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

LinearFormMatrix symbolic_product(const FqMatrix& G, bool transposed);

// Leibniz expansion of the minor on the 1-based column subset.
SparsePoly minor_poly(const LinearFormMatrix& L, const Subset& columns);

enum class Direction { Forward, Transposed };

/// h(X0) = g(G X0) - f(G X0) * target evaluated by determinants, never expanded.
/// Forward: G = G1, product G X. Transposed: G = G2, product G X^T.
struct LazyEquation {
  FqMatrix G;
  ExponentVector invariant;
  PrimeField::value_type target;
  Direction direction;

  PrimeField::value_type evaluate(std::span<const PrimeField::value_type> assignment) const;
};

using Equation = std::variant<SparsePoly, LazyEquation>;

enum class EquationTag { Forward, Transposed, RowSum, ColumnSum, Orthogonality, FieldEquation };

std::string_view to_string(EquationTag tag);
std::string_view to_string(Direction d);

inline constexpr std::uint64_t kExpansionTermLimit = 10'000'000;

// Upper bound on the terms of an expanded invariant equation: each minor of
// G X has at most n^k monomials, g and f are products of `factors` minors.
std::uint64_t expansion_term_bound(int n, int k, std::int64_t factors = 2);

// Both throw UndefinedInvariant when `target` is nullopt and ExpansionRefused
// when expansion is requested above kExpansionTermLimit.
Equation model_equation(const FqMatrix& G1, std::optional<PrimeField::value_type> target,
                        const ExponentVector& inv, bool expand);
Equation transpose_equation(const FqMatrix& G2, std::optional<PrimeField::value_type> target,
                            const ExponentVector& inv, bool expand);

PrimeField::value_type evaluate(const Equation& eq, std::span<const PrimeField::value_type> assignment);

// NotExpanded for lazy equations.
std::size_t monomial_count(const Equation& eq);

// Row sums, column sums, then x_{ij} x_{i'j} for each column j and i < i'.
std::vector<SparsePoly> permutation_constraints(const PrimeField& field, std::size_t n);

struct ModelEquation {
  EquationTag tag;
  Equation body;
  std::optional<std::size_t> invariant;  // index into ModelSystem::invariants_used
};

struct UsedInvariant {
  std::optional<PairInvariant> pair;  // absent for general kernel invariants
  ExponentVector exponents;
  PrimeField::value_type forward_target;     // value on G2
  PrimeField::value_type transposed_target;  // value on G1
};

struct ModelSystem {
  PrimeField field;
  int n = 0;
  int k = 0;
  std::vector<ModelEquation> equations;
  std::vector<UsedInvariant> invariants_used;
};

struct ModelOptions {
  std::size_t budget = 1;          // number of invariants; each yields two equations
  bool expand = true;
  bool general_invariants = false;  // HNF kernel basis instead of pair invariants
  bool field_equations = false;     // add x^q - x for every unknown
};

ModelSystem build_model(const LceInstance& instance, const ModelOptions& options);

// 0/1 assignment of a permutation matrix.
std::vector<PrimeField::value_type> permutation_assignment(const Permutation& perm);

}  // namespace lcegeom
