#include "finglobal/axioms.hpp"

#include "finglobal/errors.hpp"
#include "finglobal/subgroups.hpp"

namespace finglobal {

namespace {

void compositions(int n, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = n; p >= 1; --p) {
    current.push_back(p);
    compositions(n - p, current, out);
    current.pop_back();
  }
}

void add_unique(std::vector<GroupPtr>& list, GroupPtr g) {
  for (const auto& h : list)
    if (h->same_group(*g)) return;
  list.push_back(std::move(g));
}

void record(RelationResult& result, const std::string& where, const ZMap& lhs, const ZMap& rhs) {
  ++result.checks;
  if (lhs.matrix == rhs.matrix) return;
  if (result.failures++ > 0) return;
  result.counterexample = where;
  ZMatrix diff = lhs.matrix.rows() == rhs.matrix.rows() && lhs.matrix.cols() == rhs.matrix.cols()
                     ? lhs.matrix - rhs.matrix
                     : lhs.matrix;
  for (std::size_t c = 0; c < diff.cols() && !result.column; ++c)
    for (std::size_t r = 0; r < diff.rows(); ++r)
      if (diff(r, c) != 0) {
        result.column = c;
        break;
      }
  result.difference = std::move(diff);
}

std::string name_of(const PermGroup& g) { return g.describe(); }

const std::vector<GroupPtr>* subgroups_of(const Probe& probe, const PermGroup& g) {
  for (std::size_t i = 0; i < probe.groups.size(); ++i)
    if (probe.groups[i]->same_group(g)) return &probe.subgroups[i];
  return nullptr;
}

}  // namespace

bool AxiomReport::passed() const {
  for (const auto& r : relations)
    if (!r.passed()) return false;
  return true;
}

Probe standard_probe(int max_n, bool lattice_subgroups) {
  Probe probe;
  for (int m = 1; m <= max_n; ++m) {
    GroupPtr g = symmetric_group(m);
    std::vector<GroupPtr> subs;
    std::vector<std::vector<int>> comps;
    std::vector<int> current;
    compositions(m, current, comps);
    for (const auto& c : comps) add_unique(subs, young_subgroup(c));
    if (lattice_subgroups) {
      for (const auto& rep : subgroup_classes(g)) add_unique(subs, rep);
    }
    probe.groups.push_back(g);
    probe.subgroups.push_back(std::move(subs));

    if (m >= 2) probe.homs.push_back(standard_embedding(m));
    probe.homs.push_back(block_projection(g, 0, 0));
    for (int k = 1; k < m; ++k) {
      GroupPtr y = young_subgroup(k, m - k);
      probe.homs.push_back(GroupHom::inclusion(y, g));
      probe.homs.push_back(block_projection(y, 0, k));
      probe.homs.push_back(block_projection(y, k, m - k));
    }
    for (const Perm& s : g->generators()) probe.homs.push_back(GroupHom::conjugation(g, g, s));
  }
  return probe;
}

AxiomReport verify_axioms(const GlobalFunctor& f, const Probe& probe) {
  AxiomReport report{f.name(), {}};
  RelationResult r1;
  r1.relation = "R1 restriction functoriality";
  RelationResult r2;
  r2.relation = "R2 transfer transitivity";
  RelationResult r3;
  r3.relation = "R3 inner automorphisms act trivially";
  RelationResult r4;
  r4.relation = "R4 inflation commutes with transfer";
  RelationResult r5;
  r5.relation = "R5 double coset formula";

  for (const auto& g : probe.groups) {
    const ZMap id = f.res(GroupHom::identity(g));
    record(r1, "res(id) on " + name_of(*g), id, ZMap::identity(f.value(g)));
  }
  for (const auto& alpha : probe.homs) {
    for (const auto& beta : probe.homs) {
      if (!alpha.target()->same_group(*beta.source())) continue;
      const ZMap lhs = f.res(alpha.then(beta));
      const ZMap rhs = compose(f.res(alpha), f.res(beta));
      record(r1, "res(beta . alpha) with alpha: " + name_of(*alpha.source()) + " -> " + name_of(*alpha.target()) +
                     ", beta into " + name_of(*beta.target()),
             lhs, rhs);
    }
  }

  for (std::size_t i = 0; i < probe.groups.size(); ++i) {
    const GroupPtr& g = probe.groups[i];
    const auto& subs = probe.subgroups[i];

    for (const auto& h : subs) {
      for (const auto& l : subs) {
        if (!l->is_subgroup_of(*h)) continue;
        record(r2, "L = " + name_of(*l) + " <= H = " + name_of(*h) + " <= G = " + name_of(*g),
               compose(f.tr(h, g), f.tr(l, h)), f.tr(l, g));
      }
    }

    const std::vector<Perm>& conjugators = g->order() <= probe.all_inner_up_to ? g->elements() : g->generators();
    const ZMap id = ZMap::identity(f.value(g));
    for (const Perm& x : conjugators) {
      record(r3, "c_" + x.to_string() + " on " + name_of(*g), f.res(GroupHom::conjugation(g, g, x)), id);
    }

    for (const auto& h : subs) {
      for (const auto& k : subs) {
        const ZMap lhs = compose(f.res(GroupHom::inclusion(k, g)), f.tr(h, g));
        ZMap rhs = ZMap::zero(f.value(h), f.value(k));
        for (const Perm& x : double_cosets(*g, *k, *h)) {
          GroupPtr l = intersection(*k, *conjugate_subgroup(*h, x));
          const ZMap term = compose(f.tr(l, k), f.res(GroupHom::conjugation(l, h, x.inverse())));
          rhs = rhs + term;
        }
        record(r5, "G = " + name_of(*g) + ", K = " + name_of(*k) + ", H = " + name_of(*h), lhs, rhs);
      }
    }
  }

  for (const auto& q : probe.homs) {
    if (!q.is_surjective()) continue;
    const GroupPtr& g = q.source();
    const GroupPtr& bar = q.target();
    std::vector<GroupPtr> bar_subs;
    if (const auto* listed = subgroups_of(probe, *bar)) bar_subs = *listed;
    add_unique(bar_subs, bar);
    add_unique(bar_subs, trivial_group(bar->degree()));
    for (const auto& hb : bar_subs) {
      GroupPtr pre = q.preimage(*hb);
      GroupHom q_sub = q.restrict_to(pre).corestrict_to(hb);
      record(r4, "q: " + name_of(*g) + " -> " + name_of(*bar) + ", Hbar = " + name_of(*hb),
             compose(f.res(q), f.tr(hb, bar)), compose(f.tr(pre, g), f.res(q_sub)));
    }
  }

  report.relations = {r1, r2, r3, r4, r5};
  return report;
}

}  // namespace finglobal
