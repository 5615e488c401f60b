#include "lcegeom/integer_matrix.hpp"

#include <algorithm>
#include <utility>

#include "lcegeom/error.hpp"

namespace lcegeom {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r0 = mod_floor(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return mod_floor(s0, m);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= factor * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) -= factor * m(src, j);
  }
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) -= factor * m(i, src);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// Row operations are mirrored onto `left` (when non-null) and onto the
// column vector `rhs` (when non-null); column operations onto `right`.
struct SmithWorkspace {
  IntMatrix a;
  IntMatrix* left = nullptr;
  IntMatrix* right = nullptr;
  IntVector* rhs = nullptr;

  void rswap(std::size_t x, std::size_t y) {
    swap_rows(a, x, y);
    if (left) swap_rows(*left, x, y);
    if (rhs) std::swap((*rhs)[x], (*rhs)[y]);
  }
  void raxpy(std::size_t dst, std::size_t src, const BigInt& f) {
    row_axpy(a, dst, src, f);
    if (left) row_axpy(*left, dst, src, f);
    if (rhs) (*rhs)[dst] -= f * (*rhs)[src];
  }
  void rneg(std::size_t r) {
    negate_row(a, r);
    if (left) negate_row(*left, r);
    if (rhs) (*rhs)[r] = -(*rhs)[r];
  }
  void cswap(std::size_t x, std::size_t y) {
    swap_cols(a, x, y);
    if (right) swap_cols(*right, x, y);
  }
  void caxpy(std::size_t dst, std::size_t src, const BigInt& f) {
    col_axpy(a, dst, src, f);
    if (right) col_axpy(*right, dst, src, f);
  }

  // Brings `a` to Smith normal form; returns the rank.
  std::size_t run() {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      for (;;) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
              pr = i;
              pc = j;
            }
          }
        }
        if (pr == rows) return t;
        rswap(t, pr);
        cswap(t, pc);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a(i, t) == 0) continue;
          raxpy(i, t, floor_div(a(i, t), a(t, t)));
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(t, j) == 0) continue;
          caxpy(j, t, floor_div(a(t, j), a(t, t)));
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Divisibility d_t | rest; fold an offending row into row t and retry.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a(i, j) % a(t, t) != 0) {
              raxpy(t, i, BigInt(-1));
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a(t, t) < 0) rneg(t);
    }
    return t;
  }
};

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (auto v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "incompatible integer product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (a(i, t) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, t) * b(t, j);
    }
  return out;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector/matrix size mismatch");
  IntVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

HermiteResult hermite_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows()), 0};
  auto& a = res.form;
  auto& u = res.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (;;) {
      std::size_t p = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) != 0 && (p == a.rows() || abs(a(i, c)) < abs(a(p, c)))) p = i;
      }
      if (p == a.rows()) break;
      swap_rows(a, r, p);
      swap_rows(u, r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        const BigInt f = floor_div(a(i, c), a(r, c));
        row_axpy(a, i, r, f);
        row_axpy(u, i, r, f);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt f = floor_div(a(i, c), a(r, c));
      row_axpy(a, i, r, f);
      row_axpy(u, i, r, f);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix lattice_basis_hnf(const IntMatrix& m) {
  auto h = hermite_form(m);
  IntMatrix out(h.rank, m.cols());
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = h.form(i, j);
  return out;
}

std::vector<IntVector> int_left_kernel(const IntMatrix& m) {
  // U * m == H with U unimodular: the rows of U facing zero rows of H span
  // the left kernel and, being part of a unimodular matrix, are saturated.
  const auto h = hermite_form(m);
  const std::size_t nullity = m.rows() - h.rank;
  if (nullity == 0) return {};
  IntMatrix basis(nullity, m.rows());
  for (std::size_t i = 0; i < nullity; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis(i, j) = h.transform(h.rank + i, j);
  const auto canonical = lattice_basis_hnf(basis);
  std::vector<IntVector> out;
  out.reserve(canonical.rows());
  for (std::size_t i = 0; i < canonical.rows(); ++i) out.push_back(canonical.row(i));
  return out;
}

std::size_t int_rank(const IntMatrix& m) { return hermite_form(m).rank; }

SmithResult smith_form(const IntMatrix& m) {
  SmithResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  SmithWorkspace ws{m, &res.left, &res.right, nullptr};
  res.rank = ws.run();
  res.form = std::move(ws.a);
  return res;
}

std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& b, const BigInt& modulus) {
  if (modulus < 2) throw Error(ErrorKind::BadParams, "modulus must be at least 2");
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  // U m V = S  =>  S y == U b (mod modulus), x = V y.
  IntMatrix v = IntMatrix::identity(m.cols());
  IntVector c = b;
  SmithWorkspace ws{m, nullptr, &v, &c};
  const std::size_t r = ws.run();
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const BigInt ci = mod_floor(c[i], modulus);
    if (i >= r) {
      if (ci != 0) return std::nullopt;
      continue;
    }
    const BigInt d = mod_floor(ws.a(i, i), modulus);
    const BigInt g = gcd(d, modulus);  // gcd(0, m) == m
    if (ci % g != 0) return std::nullopt;
    const BigInt reduced_mod = modulus / g;
    if (reduced_mod == 1) continue;
    // (d/g) is invertible modulo m/g.
    y[i] = mod_floor((ci / g) * inverse_mod(d / g, reduced_mod), reduced_mod);
  }
  IntVector x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += v(i, j) * y[j];
    x[i] = mod_floor(acc, modulus);
  }
  return x;
}

}  // namespace lcegeom
