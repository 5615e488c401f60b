#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "lcegeom/field.hpp"

namespace lcegeom {

using Subset = std::vector<int>;  // strictly increasing, 1-based

/// Dense row-major matrix over a prime field.
class FqMatrix {
 public:
  using value_type = PrimeField::value_type;

  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  // Entries are reduced into [0, q).
  FqMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);
  FqMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FqMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fq at(std::size_t r, std::size_t c) const { return Fq(field_, data_.at(r * cols_ + c)); }

  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<value_type>& data() const noexcept { return data_; }

  FqMatrix select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);

struct RrefResult {
  FqMatrix matrix;
  std::vector<std::size_t> pivots;  // 0-based pivot columns
  std::size_t rank = 0;
};

RrefResult rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);
Fq det(const FqMatrix& m);
// Determinant of the k x k submatrix on the 1-based column subset `columns`.
Fq minor(const FqMatrix& m, const Subset& columns);

// Raw-residue determinant; destroys nothing, copies internally.
PrimeField::value_type det_value(const PrimeField& field, std::vector<PrimeField::value_type> square,
                                 std::size_t n);

}  // namespace lcegeom
