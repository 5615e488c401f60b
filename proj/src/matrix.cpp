#include "lcegeom/matrix.hpp"

#include <string>
#include <utility>

namespace lcegeom {

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                   std::span<const std::int64_t> entries)
    : FqMatrix(std::move(field), rows, cols) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rows * cols) +
                                                  " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = field_.reduce(entries[i]);
}

FqMatrix::FqMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : FqMatrix(std::move(field), rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (auto v : row) (*this)(r, c++) = field_.reduce(v);
    ++r;
  }
}

FqMatrix FqMatrix::identity(PrimeField field, std::size_t n) {
  FqMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::select_columns(std::span<const std::size_t> columns) const {
  FqMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] >= cols_) throw Error(ErrorKind::BadIndex, "column out of range");
      out(r, c) = (*this)(r, columns[c]);
    }
  }
  return out;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field())) {
    throw Error(ErrorKind::DimensionMismatch, "incompatible matrix product");
  }
  const auto& f = a.field();
  FqMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const auto x = a(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
    }
  }
  return out;
}

RrefResult rref(const FqMatrix& m) {
  RrefResult res{m, {}, 0};
  auto& a = res.matrix;
  const auto& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const auto scale = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const auto factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FqMatrix& m) { return rref(m).rank; }

PrimeField::value_type det_value(const PrimeField& f, std::vector<PrimeField::value_type> a,
                                 std::size_t n) {
  PrimeField::value_type d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      d = f.neg(d);
    }
    const auto pivot = a[c * n + c];
    d = f.mul(d, pivot);
    const auto pinv = f.inv(pivot);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      const auto factor = f.mul(a[i * n + c], pinv);
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
    }
  }
  return d;
}

Fq det(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
  return Fq(m.field(), det_value(m.field(), m.data(), m.rows()));
}

Fq minor(const FqMatrix& m, const Subset& columns) {
  if (columns.size() != m.rows()) {
    throw Error(ErrorKind::BadIndex, "minor needs exactly rows() columns");
  }
  std::vector<std::size_t> idx;
  idx.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int c = columns[i];
    if (c < 1 || static_cast<std::size_t>(c) > m.cols() || (i > 0 && c <= columns[i - 1])) {
      throw Error(ErrorKind::BadIndex, "column subset must be increasing within [1, n]");
    }
    idx.push_back(static_cast<std::size_t>(c - 1));
  }
  return det(m.select_columns(idx));
}

}  // namespace lcegeom
