#include <random>

#include "doctest.h"
#include "finglobal/errors.hpp"
#include "finglobal/linalg.hpp"

using namespace finglobal;

namespace {

// Cofactor expansion, only for tiny matrices.
BigInt cofactor_det(const ZMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ZMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    BigInt term = BigInt(a(0, j)) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

ZMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  ZMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % (2 * range + 1)) - range;
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    ZMatrix a = random_matrix(rng, n, n, 4);
    CHECK(determinant(a) == cofactor_det(a));
  }
  CHECK(determinant(ZMatrix::from_rows({{0, 1}, {1, 0}}, 2)) == -1);
}

TEST_CASE("hermite form is a unimodular transform") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    ZMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 5);
    HermiteForm h = hermite_normal_form(a);
    CHECK(h.transform * a == h.form);
    CHECK(is_unimodular(h.transform));
    for (std::size_t r = 0; r < h.rank; ++r) CHECK(h.form(r, h.pivot_columns[r]) > 0);
    CHECK(h.rank == rank(a));
  }
}

TEST_CASE("kernel and exact solve") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    ZMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 6, 3);
    ZMatrix k = integer_kernel(a);
    CHECK(k.cols() + rank(a) == a.cols());
    CHECK((a * k).is_zero());
    ZVector x(a.cols());
    for (auto& v : x) v = static_cast<int>(rng() % 7) - 3;
    ZVector b = a.apply(x);
    auto sol = solve_exact(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  // 2x = 1 has no integer solution
  CHECK(!solve_exact(ZMatrix::from_rows({{2}}, 1), ZVector{1}).has_value());
  // kernel of the Σ2 restriction matrix
  ZMatrix k = integer_kernel(ZMatrix::from_rows({{2, 1}}, 2));
  CHECK(k.cols() == 1);
  CHECK((k(0, 0) == 1 && k(1, 0) == -2) != (k(0, 0) == -1 && k(1, 0) == 2));
}

TEST_CASE("small kernel and determinant examples") {
  CHECK(integer_kernel(ZMatrix::from_rows({{2}}, 1)).cols() == 0);
  ZMatrix k = integer_kernel(ZMatrix::from_rows({{1, 1}}, 2));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK((k(0, 0) == 1 || k(0, 0) == -1));
  CHECK(determinant(ZMatrix::identity(3)) == 1);
}

TEST_CASE("smith invariants") {
  auto inv = smith_invariants(ZMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3));
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 6);
  CHECK(inv[2] == 12);
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), Inconsistency);
}
