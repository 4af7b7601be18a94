#include "finglobal/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "finglobal/errors.hpp"

namespace finglobal {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Inconsistency("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Inconsistency("integer overflow in matrix arithmetic");
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw Inconsistency("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVector>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVector>& columns, std::size_t rows) {
  ZMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ZVector ZMatrix::row(std::size_t r) const { return ZVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)); }

ZVector ZMatrix::column(std::size_t c) const {
  ZVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ZMatrix ZMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw InvalidInput("column range out of bounds");
  ZMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

ZMatrix ZMatrix::hstack(const ZMatrix& other) const {
  if (other.rows_ != rows_) throw InvalidInput("dimension mismatch in hstack");
  ZMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

bool ZMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

ZVector ZMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw InvalidInput("dimension mismatch in matrix-vector product");
  ZVector y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) y[r] = checked_add(y[r], checked_mul((*this)(r, c), x[c]));
  return y;
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("dimension mismatch in matrix product");
  ZMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = checked_add(m(i, j), checked_mul(aik, b(k, j)));
    }
  return m;
}

ZMatrix operator+(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("dimension mismatch in matrix sum");
  ZMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return m;
}

ZMatrix operator-(const ZMatrix& a, const ZMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("dimension mismatch in matrix difference");
  ZMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = checked_add(a.data_[i], -b.data_[i]);
  return m;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const ZMatrix& a) {
  BigMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return m;
}

ZMatrix from_big(const BigMatrix& m, std::size_t cols) {
  ZMatrix a(m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = to_int64(m[r][c]);
  return a;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(std::vector<BigInt>& target, const std::vector<BigInt>& source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < target.size(); ++c) target[c] -= factor * source[c];
}

struct BigHermite {
  BigMatrix form;
  BigMatrix transform;
  std::vector<std::size_t> pivots;
};

BigHermite big_hermite(BigMatrix h, std::size_t cols) {
  const std::size_t m = h.size();
  BigMatrix u(m, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t r = row; r < m; ++r) {
        if (h[r][col] != 0 && (best == m || abs(h[r][col]) < abs(h[best][col]))) best = r;
      }
      if (best == m) break;
      std::swap(h[row], h[best]);
      std::swap(u[row], u[best]);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (h[r][col] == 0) continue;
        const BigInt q = floor_div(h[r][col], h[row][col]);
        axpy_row(h[r], h[row], q);
        axpy_row(u[r], u[row], q);
        if (h[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) {
      for (auto& v : h[row]) v = -v;
      for (auto& v : u[row]) v = -v;
    }
    for (std::size_t r = 0; r < row; ++r) {
      const BigInt q = floor_div(h[r][col], h[row][col]);
      axpy_row(h[r], h[row], q);
      axpy_row(u[r], u[row], q);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

}  // namespace

HermiteForm hermite_normal_form(const ZMatrix& a) {
  BigHermite bh = big_hermite(to_big(a), a.cols());
  HermiteForm out;
  out.form = from_big(bh.form, a.cols());
  out.transform = from_big(bh.transform, a.rows());
  out.rank = bh.pivots.size();
  out.pivot_columns = std::move(bh.pivots);
  return out;
}

std::vector<BigInt> smith_invariants(const ZMatrix& a) {
  BigMatrix m = to_big(a);
  std::size_t rows = a.rows(), cols = a.cols();
  auto transpose = [](const BigMatrix& x, std::size_t r, std::size_t c) {
    BigMatrix t(c, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) t[j][i] = x[i][j];
    return t;
  };
  auto is_diagonal = [](const BigMatrix& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x[i].size(); ++j)
        if (i != j && x[i][j] != 0) return false;
    return true;
  };
  while (!is_diagonal(m)) {
    m = big_hermite(std::move(m), cols).form;
    m = transpose(m, rows, cols);
    std::swap(rows, cols);
  }
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (m[i][i] != 0) d.push_back(abs(m[i][i]));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

ZMatrix integer_kernel(const ZMatrix& a) {
  const std::size_t n = a.cols();
  BigHermite bh = big_hermite(to_big(a.transposed()), a.rows());
  BigMatrix basis;
  for (std::size_t r = bh.pivots.size(); r < n; ++r) basis.push_back(bh.transform[r]);
  if (basis.empty()) return ZMatrix(n, 0);
  BigMatrix reduced = big_hermite(std::move(basis), n).form;
  ZMatrix k(n, reduced.size());
  for (std::size_t c = 0; c < reduced.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) k(r, c) = to_int64(reduced[c][r]);
  return k;
}

std::optional<ZVector> solve_exact(const ZMatrix& a, std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw InvalidInput("dimension mismatch in solve_exact");
  // U * A^T = H, so A * U^T = H^T and x = U^T y.
  BigHermite bh = big_hermite(to_big(a.transposed()), a.rows());
  const std::size_t n = a.cols();
  std::vector<BigInt> y(n);
  std::vector<BigInt> residual(b.begin(), b.end());
  for (std::size_t i = 0; i < bh.pivots.size(); ++i) {
    const std::size_t p = bh.pivots[i];
    const BigInt& pivot = bh.form[i][p];
    if (residual[p] % pivot != 0) return std::nullopt;
    y[i] = residual[p] / pivot;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= y[i] * bh.form[i][c];
  }
  if (std::any_of(residual.begin(), residual.end(), [](const BigInt& v) { return v != 0; })) return std::nullopt;
  ZVector x(n);
  for (std::size_t c = 0; c < n; ++c) {
    BigInt s = 0;
    for (std::size_t i = 0; i < bh.pivots.size(); ++i) s += bh.transform[i][c] * y[i];
    x[c] = to_int64(s);
  }
  return x;
}

BigInt determinant(const ZMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigMatrix m = to_big(a);
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(const ZMatrix& a) { return big_hermite(to_big(a), a.cols()).pivots.size(); }

bool is_unimodular(const ZMatrix& a) {
  if (a.rows() != a.cols()) return false;
  const BigInt d = determinant(a);
  return d == 1 || d == -1;
}

std::string to_string(const ZMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace finglobal
