#include <random>

#include "doctest.h"
#include "finglobal/burnside.hpp"
#include "finglobal/charfun.hpp"
#include "finglobal/errors.hpp"
#include "finglobal/repring.hpp"
#include "finglobal/split.hpp"

using namespace finglobal;

TEST_CASE("burnside kernels and psi at small n") {
  BurnsideFunctor a;
  SplittingEngine e(a);
  CHECK(e.kernel_basis(1).cols() == 0);
  // basis order is [Σ2/e], [Σ2/Σ2]
  CHECK(e.kernel_basis(2) == ZMatrix::from_rows({{1}, {-2}}, 1));
  CHECK(e.psi(0, 2).matrix == ZMatrix::from_rows({{0}, {1}}, 1));
  CHECK(e.psi(2, 2).matrix == e.kernel_basis(2));
  // ψ_{0,n} is inflation along Σn -> e, ψ_{n,n} is the inclusion
  for (int n = 1; n <= 4; ++n) {
    CHECK(e.psi(0, n).matrix == a.res(block_projection(symmetric_group(n), 0, 0)).matrix);
    CHECK(e.psi(n, n).matrix == e.kernel_basis(n));
  }
}

TEST_CASE("repring kernel ranks are partition differences") {
  RepRingFunctor ru;
  SplittingEngine e(ru);
  for (int k = 1; k <= 7; ++k) {
    CHECK(e.kernel_basis(k).cols() == partition_count(k) - partition_count(k - 1));
  }
  CHECK(e.kernel_basis(4).cols() == 2);
}

TEST_CASE("splitting reports") {
  BurnsideFunctor a;
  SplittingEngine eb(a);
  auto r1 = eb.report(1);
  CHECK(abs(r1.determinant) == 1);
  auto r2 = eb.report(2);
  CHECK(r2.component_ranks == std::vector<std::size_t>{1, 0, 1});
  CHECK(abs(r2.determinant) == 1);

  RepRingFunctor ru;
  SplittingEngine er(ru);
  auto r3 = er.report(3);
  CHECK(r3.component_ranks == std::vector<std::size_t>{1, 0, 1, 1});
  for (int n = 1; n <= 5; ++n) {
    auto r = er.report(n);
    CHECK(abs(r.determinant) == 1);
    CHECK(r.restriction_split_surjective);
    for (bool ok : r.ladder) CHECK(ok);
  }
  for (int n = 1; n <= 4; ++n) CHECK(abs(eb.report(n).determinant) == 1);
}

TEST_CASE("double coset formula instances") {
  BurnsideFunctor a;
  SplittingEngine eb(a);
  auto d = eb.verify_dcf(1, 2);
  CHECK(d.equal);
  CHECK(d.lhs == ZMatrix::from_rows({{2}}, 1));
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) CHECK(eb.verify_dcf(k, n).equal);
  RepRingFunctor ru;
  SplittingEngine er(ru);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) CHECK(er.verify_dcf(k, n).equal);
  CHECK_THROWS_AS(eb.verify_dcf(0, 3), InvalidInput);
}

TEST_CASE("decomposition") {
  BurnsideFunctor a;
  SplittingEngine e(a);
  auto d = e.decompose(2, ZVector{1, 0});
  REQUIRE(d.components.size() == 3);
  CHECK(d.components[0] == ZVector{2});
  CHECK(d.components[1] == ZVector{0});
  CHECK(d.kernel_coordinates[1].empty());
  CHECK(d.components[2] == ZVector{1, -2});
  // oracle: solve against the assembled matrix
  auto report = e.report(2);
  auto direct = solve_exact(report.assembled, ZVector{1, 0});
  REQUIRE(direct);
  CHECK(*direct == ZVector{2, 1});

  auto zero = e.decompose(3, ZVector(a.value(symmetric_group(3)).rank(), 0));
  for (const auto& s : zero.kernel_coordinates)
    for (auto v : s) CHECK(v == 0);

  // ψ_{k,n}(v) decomposes to v in slot k
  const int n = 4;
  for (int k = 0; k <= n; ++k) {
    const ZMatrix basis = e.kernel_basis(k);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      ZVector v(basis.cols(), 0);
      v[j] = 1;
      auto dd = e.decompose(n, e.psi(k, n).matrix.apply(v));
      for (int m = 0; m <= n; ++m) {
        ZVector expected(e.kernel_basis(m).cols(), 0);
        if (m == k) expected = v;
        CHECK(dd.kernel_coordinates[static_cast<std::size_t>(m)] == expected);
      }
    }
  }

  std::mt19937 rng(2024);
  RepRingFunctor ru;
  SplittingEngine er(ru);
  for (int trial = 0; trial < 10; ++trial) {
    ZVector x(ru.value(symmetric_group(5)).rank());
    for (auto& v : x) v = static_cast<int>(rng() % 21) - 10;
    auto dd = er.decompose(5, x);
    CHECK(er.assemble(5, dd.kernel_coordinates) == x);
  }
}

TEST_CASE("alternating witnesses") {
  auto w5 = non_splitting_witness_alternating(5);
  REQUIRE(w5.found());
  CHECK(w5.fused.front().first.order() == 3);
  CHECK(w5.fused.front().second.order() == 3);
  CHECK(w5.image_rank < w5.sub_classes);
  CHECK(!non_splitting_witness_alternating(6).found());
  CHECK(non_splitting_witness_alternating(6).image_rank == non_splitting_witness_alternating(6).sub_classes);
  CHECK_THROWS_AS(non_splitting_witness_alternating(4), InvalidInput);

  CHECK(alternating_retractions(3).size() == 1);
  CHECK(alternating_retractions(4).size() == 1);
  CHECK(alternating_retractions(5).empty());
}
