#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcegeom {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);

struct HermiteResult {
  IntMatrix form;       // row-style HNF: pivots positive, entries above pivots reduced into [0, pivot)
  IntMatrix transform;  // unimodular U with U * input == form
  std::size_t rank = 0;
};

HermiteResult hermite_form(const IntMatrix& m);

// HNF of the lattice spanned by the rows, zero rows dropped.
IntMatrix lattice_basis_hnf(const IntMatrix& m);

struct SmithResult {
  IntMatrix form;   // diagonal d_1 | d_2 | ... with d_i >= 0
  IntMatrix left;   // unimodular U
  IntMatrix right;  // unimodular V, U * input * V == form
  std::size_t rank = 0;
};

SmithResult smith_form(const IntMatrix& m);

/// Z-basis of {v : v * m == 0}, saturated, returned in HNF (one vector per row).
std::vector<IntVector> int_left_kernel(const IntMatrix& m);

std::size_t int_rank(const IntMatrix& m);

/// One x with m * x == b (mod modulus), or nullopt when none exists.
/// Entries of the returned x lie in [0, modulus).
std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& b, const BigInt& modulus);

}  // namespace lcegeom
