// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "finglobal/axioms.hpp"
#include "finglobal/burncat.hpp"
#include "finglobal/burnside.hpp"
#include "finglobal/charfun.hpp"
#include "finglobal/errors.hpp"
#include "finglobal/repring.hpp"
#include "finglobal/split.hpp"
#include "support.hpp"

using namespace finglobal;

namespace {

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string at(const std::string& name, int n, int k = -1) {
  std::string s = name + " n=" + std::to_string(n);
  if (k >= 0) s += " k=" + std::to_string(k);
  return s;
}

// p(n) by the standard dynamic program over part sizes.
std::size_t partition_number(int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  return p[static_cast<std::size_t>(n)];
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::int64_t hook_length_count(const Partition& lambda) {
  std::int64_t hooks = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    for (int j = 0; j < lambda.parts[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < lambda.parts.size() && lambda.parts[r] > j; ++r) ++below;
      hooks *= (lambda.parts[i] - j - 1) + below + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

// A class of A_m splits off from Σ_m iff its cycle type has distinct odd
// parts; such a split pair fuses in A_{m+1} iff adding a fixed point spoils
// distinctness, i.e. the type already contains a 1.
bool fusion_expected(int m) {
  std::function<bool(int, int, bool)> search = [&](int remaining, int max_part, bool has_one) -> bool {
    if (remaining == 0) return has_one;
    for (int part = std::min(remaining, max_part); part >= 1; part -= 1) {
      if (part % 2 == 0) continue;
      if (search(remaining - part, part - 2, has_one || part == 1)) return true;
    }
    return false;
  };
  return search(m, m, false);
}

bool conjugate_in(const PermGroup& g, const Perm& a, const Perm& b) {
  for (const Perm& x : g.elements())
    if (x.conjugate(a) == b) return true;
  return false;
}

ZVector unit(std::size_t size, std::size_t i) {
  ZVector v(size, 0);
  v[i] = 1;
  return v;
}

constexpr int kBurnsideMax = 5;
constexpr int kRepMax = 7;

void criterion_dcf() {
  BurnsideFunctor a;
  RepRingFunctor ru;
  SplittingEngine eb(a), er(ru);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) expect(eb.verify_dcf(k, n).equal, at("burnside dcf", n, k));
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) expect(er.verify_dcf(k, n).equal, at("repring dcf", n, k));
}

void criterion_splitting() {
  BurnsideFunctor a;
  RepRingFunctor ru;
  SplittingEngine eb(a), er(ru);
  for (int n = 0; n <= kBurnsideMax; ++n) {
    const SplittingReport r = eb.report(n);
    expect(abs(r.determinant) == 1, at("burnside determinant", n));
    std::size_t total = 0;
    for (auto c : r.component_ranks) total += c;
    expect(total == a.value(symmetric_group(n)).rank(), at("burnside rank bookkeeping", n));
    expect(r.assembled.rows() == r.assembled.cols(), at("burnside squareness", n));
  }
  for (int n = 0; n <= kRepMax; ++n) {
    const SplittingReport r = er.report(n);
    expect(abs(r.determinant) == 1, at("repring determinant", n));
    expect(r.assembled.rows() == partition_number(n), at("repring rank", n));
    for (int k = 0; k <= n; ++k) {
      const std::size_t expected = k == 0 ? 1 : partition_number(k) - partition_number(k - 1);
      expect(r.component_ranks[static_cast<std::size_t>(k)] == expected, at("repring component rank", n, k));
    }
  }
  expect(partition_number(7) == 15, "p(7)");
}

void criterion_double_cosets() {
  for (int n = 1; n <= 7; ++n) {
    auto g = symmetric_group(n);
    auto stabilizer = young_subgroup(n - 1, 1);
    for (int k = 1; k < n; ++k) {
      expect(double_cosets(*g, *stabilizer, *young_subgroup(k, n - k)).size() == 2, at("double cosets", n, k));
    }
  }
}

void check_ladder(const GlobalFunctor& f, int max_n) {
  SplittingEngine e(f);
  for (int n = 1; n <= max_n; ++n) {
    const ZMatrix res = f.res(standard_embedding(n)).matrix;
    for (int k = 0; k < n; ++k) {
      expect(res * e.psi(k, n).matrix == e.psi(k, n - 1).matrix, at(f.name() + " ladder", n, k));
    }
  }
}

void criterion_ladder() {
  BurnsideFunctor a;
  RepRingFunctor ru;
  check_ladder(a, kBurnsideMax);
  check_ladder(ru, kRepMax);
}

void check_surjective(const GlobalFunctor& f, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const ZMatrix res = f.res(standard_embedding(n)).matrix;
    for (std::size_t j = 0; j < res.rows(); ++j) {
      const ZVector e = unit(res.rows(), j);
      auto x = solve_exact(res, e);
      expect(x && res.apply(*x) == e, at(f.name() + " preimage of basis vector " + std::to_string(j), n));
    }
  }
}

void criterion_surjectivity() {
  BurnsideFunctor a;
  RepRingFunctor ru;
  check_surjective(a, kBurnsideMax);
  check_surjective(ru, kRepMax);
}

void check_decompositions(const GlobalFunctor& f, int max_n, std::mt19937_64& rng) {
  SplittingEngine e(f);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int n = 0; n <= max_n; ++n) {
    const std::size_t rank = f.value(symmetric_group(n)).rank();
    for (int trial = 0; trial < 50; ++trial) {
      ZVector x(rank);
      for (auto& v : x) v = dist(rng);
      const Decomposition d = e.decompose(n, x);
      expect(e.assemble(n, d.kernel_coordinates) == x, at(f.name() + " round trip", n));
    }
    for (int k = 0; k <= n; ++k) {
      const std::size_t size = e.kernel_basis(k).cols();
      for (std::size_t j = 0; j < size; ++j) {
        const Decomposition d = e.decompose(n, e.psi(k, n).matrix.apply(unit(size, j)));
        for (int m = 0; m <= n; ++m) {
          const std::size_t msize = e.kernel_basis(m).cols();
          const ZVector expected = m == k ? unit(size, j) : ZVector(msize, 0);
          expect(d.kernel_coordinates[static_cast<std::size_t>(m)] == expected, at(f.name() + " slot", n, k));
        }
      }
    }
  }
}

void criterion_decomposition() {
  std::mt19937_64 rng(20240601);
  BurnsideFunctor a;
  RepRingFunctor ru;
  check_decompositions(a, kBurnsideMax, rng);
  check_decompositions(ru, kRepMax, rng);
}

void criterion_sections() {
  BurnsideCategory cat;
  for (int n = 1; n <= 4; ++n) {
    const Section s = section_of_restriction(cat, n);
    const Morphism restrict = cat.restriction(standard_embedding(n));
    const Morphism id = cat.identity(symmetric_group(n - 1));
    expect(cat.compose(restrict, s.solver) == id, at("solver section", n));
    expect(cat.compose(restrict, s.from_splitting) == id, at("splitting section", n));
    // the action on the Burnside functor is a right inverse as well
    const ZMatrix res = cat.burnside().res(standard_embedding(n)).matrix;
    expect(res * cat.action_on_burnside(s.solver) == ZMatrix::identity(res.rows()), at("section action", n));
    if (n == 2 || n == 3) {
      const ProductSectionReport p = product_section(cat, symmetric_group(2), s.solver, n);
      expect(p.action_identity, at("product section action", n));
      expect(p.category_identity, at("product section composite", n));
    }
  }
}

void criterion_fusion() {
  for (int n = 5; n <= 8; ++n) {
    const AlternatingWitness w = non_splitting_witness_alternating(n);
    const bool expected = n == 5 || n == 7;
    expect(expected == fusion_expected(n - 1), at("cycle-type oracle", n));
    expect(w.found() == expected, at("fusion witness", n));
    expect((w.image_rank < w.sub_classes) == expected, at("lattice rank drop", n));
    if (w.found()) {
      auto sub = alternating_group(n - 1);
      auto big = alternating_group(n);
      const auto& [a, b] = w.fused.front();
      expect(!conjugate_in(*sub, a, b), at("witness classes distinct in A_{n-1}", n));
      expect(conjugate_in(*big, a.extended(n), b.extended(n)), at("witness classes fuse in A_n", n));
    }
  }
}

void criterion_axioms() {
  BurnsideFunctor a;
  RepRingFunctor ru;
  const Probe probe = standard_probe(4);
  for (const GlobalFunctor* f : {static_cast<const GlobalFunctor*>(&a), static_cast<const GlobalFunctor*>(&ru)}) {
    const AxiomReport r = verify_axioms(*f, probe);
    for (const auto& rel : r.relations) {
      expect(rel.passed() && rel.checks > 0, f->name() + " " + rel.relation + ": " + rel.counterexample);
    }
    testing_support::CorruptedTransfer bad(*f, 1);
    const AxiomReport broken = verify_axioms(bad, probe);
    const RelationResult& r5 = broken.relations.back();
    expect(!r5.passed() && r5.column.has_value(), f->name() + " fault injection not detected by R5");
  }
}

void criterion_characters() {
  for (int n = 0; n <= 8; ++n) {
    const CharacterTable t = char_table_symmetric(n);
    const auto order = static_cast<std::int64_t>(t.group()->order());
    expect(t.size() == partition_number(n), at("table size", n));
    for (std::size_t i = 0; i < t.size(); ++i) {
      expect(t.irreducibles[i].values[0] == hook_length_count(t.labels[i][0]), at("hook length", n));
      for (std::size_t j = 0; j < t.size(); ++j) {
        expect(scaled_inner_product(t.irreducibles[i], t.irreducibles[j]) == (i == j ? order : 0),
               at("row orthogonality", n));
      }
    }
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        std::int64_t s = 0;
        for (const auto& chi : t.irreducibles) s += chi.values[a] * chi.values[b];
        expect(s == (a == b ? order / static_cast<std::int64_t>(t.classes->class_size(a)) : 0),
               at("column orthogonality", n));
      }
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const CharacterTable t = char_table_symmetric(n);
    for (int k = 1; k < n; ++k) {
      auto h = young_subgroup(k, n - k);
      const CharacterTable th = char_table_young(h);
      const GroupHom incl = GroupHom::inclusion(h, t.group());
      const auto induced = induce_classfunctions(th.irreducibles, t.classes);
      for (std::size_t a = 0; a < th.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          const ClassFunction res = restrict_classfunction(t.irreducibles[b], incl, th.classes);
          expect(inner_product(induced[a], t.irreducibles[b]) == inner_product(th.irreducibles[a], res),
                 at("frobenius reciprocity", n, k));
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"symmetric double coset formula (Burnside n<=5, RU n<=6)", criterion_dcf},
      {"splitting isomorphism |det| = 1 (Burnside n<=5, RU n<=7)", criterion_splitting},
      {"two double cosets Σ_{n-1}\\Σ_n/Σ_{k,n-k} (n<=7)", criterion_double_cosets},
      {"ladder relation F(i_n^*) psi_{k,n} = psi_{k,n-1}", criterion_ladder},
      {"restriction along i_n is split surjective", criterion_surjectivity},
      {"decomposition round trip and slot concentration", criterion_decomposition},
      {"Burnside category sections (n=1..4) and product sections (G=Σ_2)", criterion_sections},
      {"alternating fusion witnesses at n=5,7 and none at n=6,8", criterion_fusion},
      {"global functor relations R1-R5 and fault injection", criterion_axioms},
      {"character table orthogonality, hook lengths, Frobenius reciprocity", criterion_characters},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " [" << secs << " s]";
    if (!ok) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
