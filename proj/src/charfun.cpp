#include "finglobal/charfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "finglobal/errors.hpp"

namespace finglobal {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw InvalidInput("partition parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ')';
  return out.str();
}

std::string to_string(const CharacterLabel& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "x" : "") + label[i].to_string();
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// λ as a set of beta numbers λ_i + (ℓ - 1 - i), strictly decreasing.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int v = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (v > 0) parts.push_back(v);
  }
  return parts;
}

std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t next,
                    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (next == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[next];
  const std::vector<int> beta = beta_set(lambda);
  std::int64_t total = 0;
  for (int b : beta) {
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    std::vector<int> moved = beta;
    std::replace(moved.begin(), moved.end(), b, target);
    const std::int64_t sub = mn_rec(from_beta(std::move(moved)), mu, next + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidInput("negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::size_t partition_count(int n) { return partitions(n).size(); }

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidInput("partition sizes differ in character evaluation");
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return mn_rec(lambda.parts, mu.parts, 0, memo);
}

std::vector<int> cycle_type_on(const Perm& p, std::span<const int> points) {
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  std::vector<bool> inside(static_cast<std::size_t>(p.degree()), false);
  for (int x : points) inside[static_cast<std::size_t>(x)] = true;
  std::vector<int> lengths;
  for (int x : points) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p[y]) {
      if (!inside[static_cast<std::size_t>(y)]) throw InvalidInput("point set is not invariant");
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::optional<std::vector<std::vector<int>>> symmetric_blocks(const PermGroup& g) {
  auto blocks = orbits(g);
  std::size_t expected = 1;
  for (const auto& b : blocks) {
    for (std::size_t i = 2; i <= b.size(); ++i) expected *= i;
    if (expected > g.order()) return std::nullopt;
  }
  if (expected != g.order()) return std::nullopt;
  return blocks;
}

ZMatrix CharacterTable::matrix() const {
  ZMatrix m(irreducibles.size(), column_order.size());
  for (std::size_t r = 0; r < irreducibles.size(); ++r)
    for (std::size_t c = 0; c < column_order.size(); ++c) m(r, c) = irreducibles[r].values[column_order[c]];
  return m;
}

CharacterTable char_table_young(GroupPtr g) {
  auto blocks = symmetric_blocks(*g);
  if (!blocks) throw InvalidInput("no character table: group is not a product of symmetric groups");
  CharacterTable table;
  table.classes = conjugacy_classes(g);
  const auto& cc = *table.classes;

  std::vector<std::vector<Partition>> block_partitions;
  for (const auto& b : *blocks) block_partitions.push_back(partitions(static_cast<int>(b.size())));

  std::vector<std::vector<Partition>> class_types(cc.size());
  for (std::size_t c = 0; c < cc.size(); ++c) {
    for (const auto& b : *blocks) class_types[c].emplace_back(cycle_type_on(cc.representatives[c], b));
  }

  // Labels: odometer over per-block partition lists, last block fastest.
  std::vector<std::size_t> digits(blocks->size(), 0);
  bool done = false;
  while (!done) {
    CharacterLabel label;
    for (std::size_t i = 0; i < digits.size(); ++i) label.push_back(block_partitions[i][digits[i]]);
    ClassFunction chi{table.classes, std::vector<std::int64_t>(cc.size(), 1)};
    for (std::size_t c = 0; c < cc.size(); ++c) {
      for (std::size_t i = 0; i < label.size(); ++i) {
        chi.values[c] = checked_mul(chi.values[c], mn_character(label[i], class_types[c][i]));
      }
    }
    table.labels.push_back(std::move(label));
    table.irreducibles.push_back(std::move(chi));
    std::size_t pos = digits.size();
    for (;;) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++digits[pos] < block_partitions[pos].size()) break;
      digits[pos] = 0;
    }
  }

  table.column_order.resize(cc.size());
  std::iota(table.column_order.begin(), table.column_order.end(), 0u);
  std::sort(table.column_order.begin(), table.column_order.end(),
            [&](std::size_t a, std::size_t b) { return class_types[a] < class_types[b]; });
  if (table.irreducibles.size() != cc.size()) throw Inconsistency("character table is not square");
  return table;
}

CharacterTable char_table_symmetric(int n, int max_n) {
  if (n < 0) throw InvalidInput("negative symmetric group index");
  if (n > max_n) throw CapExceeded("character tables are capped at n = " + std::to_string(max_n));
  CharacterTable table = char_table_young(symmetric_group(n));
  if (n == 0) table.labels = {CharacterLabel{Partition{}}};
  return table;
}

CharacterTable char_table_product(const CharacterTable& a, const CharacterTable& b) {
  const PermGroup& ga = *a.group();
  const PermGroup& gb = *b.group();
  CharacterTable table;
  table.classes = conjugacy_classes(direct_product(ga, gb));
  const auto& cc = *table.classes;
  std::vector<std::size_t> class_a(cc.size()), class_b(cc.size());
  for (std::size_t c = 0; c < cc.size(); ++c) {
    const Perm& p = cc.representatives[c];
    class_a[c] = a.classes->class_index(p.restricted(0, ga.degree()));
    class_b[c] = b.classes->class_index(p.restricted(ga.degree(), gb.degree()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      CharacterLabel label = a.labels[i];
      label.insert(label.end(), b.labels[j].begin(), b.labels[j].end());
      ClassFunction chi{table.classes, std::vector<std::int64_t>(cc.size())};
      for (std::size_t c = 0; c < cc.size(); ++c) {
        chi.values[c] = checked_mul(a.irreducibles[i].values[class_a[c]], b.irreducibles[j].values[class_b[c]]);
      }
      table.labels.push_back(std::move(label));
      table.irreducibles.push_back(std::move(chi));
    }
  }
  std::vector<std::size_t> pos_a(a.column_order.size()), pos_b(b.column_order.size());
  for (std::size_t i = 0; i < pos_a.size(); ++i) pos_a[a.column_order[i]] = i;
  for (std::size_t i = 0; i < pos_b.size(); ++i) pos_b[b.column_order[i]] = i;
  table.column_order.resize(cc.size());
  std::iota(table.column_order.begin(), table.column_order.end(), 0u);
  std::sort(table.column_order.begin(), table.column_order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(pos_a[class_a[x]], pos_b[class_b[x]]) < std::pair(pos_a[class_a[y]], pos_b[class_b[y]]);
  });
  return table;
}

std::int64_t scaled_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  if (!phi.group()->same_group(*psi.group())) throw InvalidInput("inner product of class functions on different groups");
  std::int64_t total = 0;
  for (std::size_t c = 0; c < phi.values.size(); ++c) {
    const auto size = static_cast<std::int64_t>(phi.classes->class_size(c));
    total = checked_add(total, checked_mul(size, checked_mul(phi.values[c], psi.values[c])));
  }
  return total;
}

std::int64_t inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  const std::int64_t scaled = scaled_inner_product(phi, psi);
  const auto order = static_cast<std::int64_t>(phi.group()->order());
  if (scaled % order != 0) throw InvalidInput("inner product is not an integer");
  return scaled / order;
}

ClassFunction restrict_classfunction(const ClassFunction& phi, const GroupHom& alpha,
                                     std::shared_ptr<const ConjugacyClasses> source_classes) {
  if (!alpha.target()->same_group(*phi.group())) throw InvalidInput("restriction along a map into another group");
  if (!source_classes) source_classes = conjugacy_classes(alpha.source());
  ClassFunction out{source_classes, std::vector<std::int64_t>(source_classes->size())};
  for (std::size_t c = 0; c < source_classes->size(); ++c) {
    const std::uint32_t k = alpha.source()->index_of(source_classes->representatives[c]);
    out.values[c] = phi.values[phi.classes->class_of[alpha(k)]];
  }
  return out;
}

std::vector<ClassFunction> induce_classfunctions(std::span<const ClassFunction> phis,
                                                 std::shared_ptr<const ConjugacyClasses> group_classes) {
  std::vector<ClassFunction> out;
  if (phis.empty()) return out;
  const auto& sub_classes = phis.front().classes;
  const PermGroup& h = *sub_classes->group;
  const PermGroup& g = *group_classes->group;
  if (!h.is_subgroup_of(g)) throw InvalidInput("induction from a non-subgroup");

  constexpr std::uint32_t kOutside = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> sub_class_of(g.order(), kOutside);
  for (std::uint32_t i = 0; i < h.order(); ++i) sub_class_of[g.index_of(h.element(i))] = sub_classes->class_of[i];

  // hits[c][d] = #{x in G : x^-1 g_c x lies in sub-class d}
  std::vector<std::vector<std::int64_t>> hits(group_classes->size(), std::vector<std::int64_t>(sub_classes->size(), 0));
  for (std::size_t c = 0; c < group_classes->size(); ++c) {
    const Perm& rep = group_classes->representatives[c];
    for (const Perm& x : g.elements()) {
      const std::uint32_t d = sub_class_of[g.index_of(x.inverse() * rep * x)];
      if (d != kOutside) ++hits[c][d];
    }
  }
  const auto order = static_cast<std::int64_t>(h.order());
  for (const ClassFunction& phi : phis) {
    if (!phi.group()->same_group(h)) throw InvalidInput("class functions to induce live on different groups");
    ClassFunction ind{group_classes, std::vector<std::int64_t>(group_classes->size())};
    for (std::size_t c = 0; c < group_classes->size(); ++c) {
      std::int64_t total = 0;
      for (std::size_t d = 0; d < sub_classes->size(); ++d) total = checked_add(total, checked_mul(hits[c][d], phi.values[d]));
      if (total % order != 0) throw Inconsistency("induced character value is not an integer");
      ind.values[c] = total / order;
    }
    out.push_back(std::move(ind));
  }
  return out;
}

ClassFunction induce_classfunction(const ClassFunction& phi, std::shared_ptr<const ConjugacyClasses> group_classes) {
  return induce_classfunctions(std::span(&phi, 1), std::move(group_classes)).front();
}

ZVector decompose_into_irreducibles(const ClassFunction& phi, const CharacterTable& table) {
  if (!phi.group()->same_group(*table.group())) throw InvalidInput("class function and table are on different groups");
  ZVector coeffs(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    coeffs[i] = inner_product(phi, table.irreducibles[i]);
  }
  return coeffs;
}

}  // namespace finglobal
