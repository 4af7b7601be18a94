#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "finglobal/errors.hpp"
#include "finglobal/permgroup.hpp"
#include "finglobal/subgroups.hpp"

using namespace finglobal;

namespace {

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

// Brute-force double coset count by explicit set enumeration.
std::size_t brute_double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  std::set<std::vector<Perm>> seen;
  for (const Perm& x : g.elements()) {
    std::vector<Perm> coset;
    for (const Perm& a : h.elements())
      for (const Perm& b : k.elements()) coset.push_back(a * x * b);
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    seen.insert(coset);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("perm arithmetic") {
  Perm a = Perm::from_cycles("(1 2 3)", 4);
  Perm b = Perm::from_cycles("(3 4)", 4);
  CHECK((a * b)[3] == 0);  // 4 -> 3 -> 1
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);
  CHECK(a.cycle_type() == std::vector<int>{3, 1});
  CHECK(a.to_string() == "(1 2 3)");
  CHECK(Perm(3).to_string() == "()");
  CHECK(Perm::from_cycles(a.to_string(), 4) == a);
  CHECK_THROWS_AS(Perm::from_cycles("(1 1)", 3), InvalidInput);
  CHECK_THROWS_AS(Perm::from_cycles("(1 5)", 3), InvalidInput);
  std::vector<int> bad{1, 1, 2};
  CHECK_THROWS_AS(Perm::from_images(bad), InvalidInput);
}

TEST_CASE("standard group orders") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(symmetric_group(n)->order() == factorial(n));
    if (n >= 2) CHECK(alternating_group(n)->order() == factorial(n) / 2);
  }
  CHECK(symmetric_group(0)->same_group(*symmetric_group(1)));
  CHECK(young_subgroup(2, 3)->order() == 12);
  CHECK(young_subgroup(0, 3)->same_group(*symmetric_group(3)));
  CHECK_THROWS_AS(PermGroup::generate(8, symmetric_group(8)->generators(), 1000), CapExceeded);
}

TEST_CASE("conjugacy classes of symmetric groups match partition counts") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 1; n <= 7; ++n) {
    auto cc = conjugacy_classes(symmetric_group(n));
    CHECK(cc->size() == expected[n]);
    std::size_t total = 0;
    for (std::size_t c = 0; c < cc->size(); ++c) {
      total += cc->class_size(c);
      // all members share a cycle type
      for (auto m : cc->members[c]) CHECK(cc->group->element(m).cycle_type() == cc->representatives[c].cycle_type());
    }
    CHECK(total == factorial(n));
    CHECK(cc->representatives.front().is_identity());
  }
}

TEST_CASE("double cosets: Young times point stabilizer") {
  for (int n = 2; n <= 6; ++n) {
    auto g = symmetric_group(n);
    auto k = young_subgroup(n - 1, 1);
    for (int a = 1; a < n; ++a) {
      auto h = young_subgroup(a, n - a);
      auto reps = double_cosets(*g, *k, *h);
      CHECK(reps.size() == 2);
      CHECK(reps.size() == brute_double_cosets(*g, *k, *h));
    }
  }
  auto s4 = symmetric_group(4);
  auto h = young_subgroup(2, 2);
  auto triv = trivial_group(4);
  CHECK(double_cosets(*s4, *h, *triv).size() == 6);
  CHECK(double_cosets(*s4, *h, *h).size() == brute_double_cosets(*s4, *h, *h));
  CHECK_THROWS_AS(double_cosets(*young_subgroup(2, 2), *symmetric_group(4), *h), InvalidInput);
}

TEST_CASE("homomorphisms") {
  auto i4 = standard_embedding(4);
  CHECK(i4.is_injective());
  CHECK(!i4.is_surjective());
  CHECK(i4.verify_full());
  auto y = young_subgroup(2, 3);
  auto p = block_projection(y, 2, 3);
  CHECK(p.is_surjective());
  CHECK(p.verify_full());
  CHECK(p.target()->same_group(*symmetric_group(3)));
  auto s3 = symmetric_group(3);
  std::vector<std::uint32_t> images;
  for (const Perm& gen : s3->generators()) images.push_back(s3->index_of(gen.sign() < 0 ? gen : Perm(3)));
  // sign-like map to the subgroup <(1 2)> realized inside Σ3
  auto sgn = GroupHom::from_function(s3, symmetric_group(2), [](const Perm& x) {
    return x.sign() > 0 ? Perm(2) : Perm::from_cycles("(1 2)", 2);
  });
  CHECK(sgn.verify_full());
  CHECK(sgn.preimage(*trivial_group(2))->same_group(*alternating_group(3)));
  CHECK_THROWS_AS(GroupHom::from_function(s3, symmetric_group(2),
                                          [](const Perm& x) { return x[0] == 0 ? Perm(2) : Perm::from_cycles("(1 2)", 2); }),
                  InvalidInput);
}

TEST_CASE("normalizers and Weyl groups") {
  auto s4 = symmetric_group(4);
  CHECK(normalizer(*s4, *young_subgroup(2, 2))->order() == 8);
  CHECK(weyl_order(*s4, *trivial_group(4)) == 24);
  CHECK(weyl_order(*s4, *alternating_group(4)) == 2);
  CHECK(centralizer(*s4, Perm::from_cycles("(1 2 3 4)", 4))->order() == 4);
}

TEST_CASE("subgroup lattice class counts") {
  // Known numbers of conjugacy classes of subgroups.
  CHECK(SubgroupLattice(symmetric_group(3)).size() == 4);
  CHECK(SubgroupLattice(symmetric_group(4)).size() == 11);
  CHECK(SubgroupLattice(alternating_group(4)).size() == 5);
  CHECK(SubgroupLattice(alternating_group(5)).size() == 9);
  CHECK(SubgroupLattice(symmetric_group(5)).size() == 19);
  CHECK(SubgroupLattice(symmetric_group(4)).total_subgroups() == 30);
  CHECK(SubgroupLattice(symmetric_group(5)).total_subgroups() == 156);
}

TEST_CASE("random subgroups are identified up to conjugacy") {
  std::mt19937 rng(7);
  auto s5 = symmetric_group(5);
  SubgroupLattice lattice(s5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Perm> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(s5->element(rng() % s5->order()));
    auto h = PermGroup::generate(5, gens);
    auto match = lattice.identify(*h);
    const auto& rep = lattice.classes()[match.class_index].representative;
    CHECK(rep->order() == h->order());
    CHECK(conjugate_subgroup(*rep, s5->element(match.conjugator))->same_group(*h));
  }
}

TEST_CASE("fusion of alternating subgroups") {
  CHECK(!fused_pairs(alternating_group(4), alternating_group(5)).empty());
  CHECK(fused_pairs(alternating_group(5), alternating_group(6)).empty());
}

namespace {

// Class sizes from explicit conjugation orbits over all elements.
std::multiset<std::size_t> brute_class_sizes(const PermGroup& g) {
  std::set<Perm> seen;
  std::multiset<std::size_t> sizes;
  for (const Perm& x : g.elements()) {
    if (seen.count(x)) continue;
    std::set<Perm> orbit;
    for (const Perm& y : g.elements()) orbit.insert(y.conjugate(x));
    seen.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

std::multiset<std::size_t> class_sizes(const GroupPtr& g) {
  auto cc = conjugacy_classes(g);
  std::multiset<std::size_t> sizes;
  for (std::size_t c = 0; c < cc->size(); ++c) sizes.insert(cc->class_size(c));
  return sizes;
}

}  // namespace

TEST_CASE("closure and standard group examples") {
  CHECK(close_generators(2, {Perm::from_cycles("(1 2)", 2)})->order() == 2);
  CHECK(close_generators(4, {Perm::from_cycles("(1 2)", 4), Perm::from_cycles("(1 2 3 4)", 4)})->order() == 24);
  auto a5 = close_generators(5, {Perm::from_cycles("(1 2 3)", 5), Perm::from_cycles("(3 4 5)", 5)});
  CHECK(a5->order() == 60);
  CHECK(a5->same_group(*alternating_group(5)));
  CHECK(young_subgroup(2, 2)->order() == 4);
  CHECK(alternating_group(4)->order() == 12);
}

TEST_CASE("class sizes against brute-force orbits") {
  CHECK(class_sizes(symmetric_group(3)) == std::multiset<std::size_t>{1, 3, 2});
  CHECK(class_sizes(alternating_group(4)) == std::multiset<std::size_t>{1, 3, 4, 4});
  CHECK(class_sizes(alternating_group(5)) == std::multiset<std::size_t>{1, 15, 20, 12, 12});
  for (auto g : {symmetric_group(4), alternating_group(5), young_subgroup(2, 3)}) {
    CHECK(class_sizes(g) == brute_class_sizes(*g));
  }
}

TEST_CASE("small examples of the remaining group algorithms") {
  CHECK(subgroup_classes(symmetric_group(2)).size() == 2);
  auto s3 = symmetric_group(3);
  CHECK(double_cosets(*s3, *s3, *s3).size() == 1);
  CHECK(double_cosets(*s3, *s3, *s3).front().is_identity());
  CHECK(double_cosets(*s3, *trivial_group(3), *trivial_group(3)).size() == 6);
  CHECK(double_cosets(*symmetric_group(4), *young_subgroup(3, 1), *young_subgroup(2, 2)).size() == 2);
  CHECK(fused_pairs(s3, symmetric_group(4)).empty());
  auto pairs = fused_pairs(alternating_group(4), alternating_group(5));
  REQUIRE(pairs.size() == 1);
  auto a4 = alternating_group(4);
  auto a4cc = conjugacy_classes(a4);
  const Perm c1 = Perm::from_cycles("(1 2 3)", 4), c2 = Perm::from_cycles("(1 3 2)", 4);
  const std::set<std::size_t> expected{a4cc->class_index(c1), a4cc->class_index(c2)};
  const std::set<std::size_t> got{a4cc->class_index(pairs[0].first.restricted(0, 4)),
                                  a4cc->class_index(pairs[0].second.restricted(0, 4))};
  CHECK(expected.size() == 2);
  CHECK(got == expected);
  CHECK(centralizer(*s3, Perm::from_cycles("(1 2 3)", 3))->order() == 3);
  CHECK(normalizer(*s3, *s3)->same_group(*s3));
  CHECK(weyl_order(*symmetric_group(2), *trivial_group(2)) == 2);
}
