#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace finglobal {

using BigInt = boost::multiprecision::cpp_int;
using ZVector = std::vector<std::int64_t>;

/// Dense integer matrix, row-major. Arithmetic throws on int64 overflow;
/// eliminations run in arbitrary precision internally.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(const std::vector<ZVector>& rows, std::size_t cols);
  static ZMatrix from_columns(const std::vector<ZVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ZVector row(std::size_t r) const;
  ZVector column(std::size_t c) const;
  ZMatrix transposed() const;
  /// Columns [first, first + count).
  ZMatrix columns(std::size_t first, std::size_t count) const;
  /// This matrix with `other`'s columns appended.
  ZMatrix hstack(const ZMatrix& other) const;
  bool is_zero() const;

  ZVector apply(std::span<const std::int64_t> x) const;

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator+(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator-(const ZMatrix& a, const ZMatrix& b);
  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const BigInt& v);

/// Row Hermite normal form H = U * A with U unimodular. Pivots are positive
/// and entries above a pivot lie in [0, pivot).
struct HermiteForm {
  ZMatrix form;
  ZMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hermite_normal_form(const ZMatrix& a);
/// Diagonal of the Smith normal form, each dividing the next (nonzero part only).
std::vector<BigInt> smith_invariants(const ZMatrix& a);

/// Z-basis (as columns) of {x : A x = 0}, in Hermite-reduced form.
ZMatrix integer_kernel(const ZMatrix& a);
/// Integer x with A x = b, or nullopt if none exists.
std::optional<ZVector> solve_exact(const ZMatrix& a, std::span<const std::int64_t> b);
/// Exact determinant by fraction-free elimination.
BigInt determinant(const ZMatrix& a);
std::size_t rank(const ZMatrix& a);
bool is_unimodular(const ZMatrix& a);

std::string to_string(const ZMatrix& m);

}  // namespace finglobal
