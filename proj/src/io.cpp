#include "finglobal/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "finglobal/errors.hpp"

namespace finglobal {

namespace {

Json cycle_strings(const std::vector<Perm>& perms) {
  Json out = Json::array();
  for (const Perm& p : perms) out.push_back(p.to_string());
  return out;
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

Json vector_json(const ZVector& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json partition_json(const Partition& p) {
  Json out = Json::array();
  for (int x : p.parts) out.push_back(x);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["generators"] = cycle_strings(g.generators());
  j["order"] = g.order();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& s : j.at("generators")) gens.push_back(Perm::from_cycles(s.get<std::string>(), degree));
  GroupPtr g = PermGroup::generate(degree, gens);
  if (j.contains("order") && j.at("order").get<std::size_t>() != g->order()) {
    throw InvalidInput("group order in JSON does not match its generators");
  }
  return g;
}

Json to_json(const ZMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
  return rows;
}

ZMatrix matrix_from_json(const Json& j) {
  std::vector<ZVector> rows;
  for (const auto& r : j) rows.push_back(r.get<ZVector>());
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return ZMatrix::from_rows(rows, cols);
}

Json to_json(const FreeAbelian& a) { return Json(a.labels); }

Json to_json(const ZMap& m) {
  Json j;
  j["source"] = to_json(m.source);
  j["target"] = to_json(m.target);
  j["rows"] = m.matrix.rows();
  j["cols"] = m.matrix.cols();
  j["matrix"] = to_json(m.matrix);
  return j;
}

ZMap zmap_from_json(const Json& j) {
  ZMap m;
  m.source.labels = j.at("source").get<std::vector<std::string>>();
  m.target.labels = j.at("target").get<std::vector<std::string>>();
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  m.matrix = rows == 0 || cols == 0 ? ZMatrix(rows, cols) : matrix_from_json(j.at("matrix"));
  if (m.matrix.rows() != m.target.rank() || m.matrix.cols() != m.source.rank()) {
    throw InvalidInput("map dimensions do not match its bases");
  }
  return m;
}

Json to_json(const CharacterTable& t) {
  Json j;
  j["group"] = to_json(*t.group());
  Json reps = Json::array(), sizes = Json::array();
  for (auto c : t.column_order) {
    reps.push_back(t.classes->representatives[c].to_string());
    sizes.push_back(t.classes->class_size(c));
  }
  j["class_reps"] = reps;
  j["class_sizes"] = sizes;
  Json labels = Json::array();
  for (const auto& label : t.labels) {
    if (label.size() == 1) {
      labels.push_back(partition_json(label.front()));
    } else {
      Json parts = Json::array();
      for (const auto& p : label) parts.push_back(partition_json(p));
      labels.push_back(parts);
    }
  }
  j["labels"] = labels;
  j["matrix"] = to_json(t.matrix());
  return j;
}

CharacterTable char_table_from_json(const Json& j) {
  GroupPtr g = group_from_json(j.at("group"));
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const int degree = g->degree();
  for (const auto& s : j.at("class_reps")) {
    t.column_order.push_back(t.classes->class_index(Perm::from_cycles(s.get<std::string>(), degree)));
  }
  if (t.column_order.size() != t.classes->size()) throw InvalidInput("character table has the wrong number of classes");
  for (const auto& l : j.at("labels")) {
    CharacterLabel label;
    if (l.empty() || l.front().is_number()) {
      label.emplace_back(l.get<std::vector<int>>());
    } else {
      for (const auto& p : l) label.emplace_back(p.get<std::vector<int>>());
    }
    t.labels.push_back(std::move(label));
  }
  const ZMatrix m = matrix_from_json(j.at("matrix"));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ClassFunction chi{t.classes, std::vector<std::int64_t>(t.classes->size())};
    for (std::size_t c = 0; c < m.cols(); ++c) chi.values[t.column_order[c]] = m(r, c);
    t.irreducibles.push_back(std::move(chi));
  }
  return t;
}

Json marks_to_json(const PermGroup& g, const FreeAbelian& basis, const ZMatrix& marks) {
  Json j;
  j["group"] = to_json(g);
  j["basis"] = to_json(basis);
  j["matrix"] = to_json(marks);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["functor"] = r.functor;
  j["passed"] = r.passed();
  Json rel = Json::array();
  for (const auto& x : r.relations) {
    Json e;
    e["relation"] = x.relation;
    e["checks"] = x.checks;
    e["failures"] = x.failures;
    if (!x.passed()) {
      e["counterexample"] = x.counterexample;
      if (x.column) e["column"] = *x.column;
      if (x.difference) e["difference"] = to_json(*x.difference);
    }
    rel.push_back(e);
  }
  j["relations"] = rel;
  return j;
}

Json to_json(const DcfReport& r) {
  Json j;
  j["functor"] = r.functor;
  j["n"] = r.n;
  j["k"] = r.k;
  j["equal"] = r.equal;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  if (r.first_differing_column) j["first_differing_column"] = *r.first_differing_column;
  return j;
}

Json to_json(const SplittingReport& r) {
  Json j;
  j["functor"] = r.functor;
  j["n"] = r.n;
  j["component_ranks"] = r.component_ranks;
  j["determinant"] = big_to_json(r.determinant);
  Json kernels = Json::array(), psi = Json::array();
  for (const auto& k : r.kernel_bases) {
    Json e;
    e["rows"] = k.rows();
    e["cols"] = k.cols();
    e["matrix"] = to_json(k);
    kernels.push_back(e);
  }
  for (const auto& p : r.psi) psi.push_back(to_json(p));
  j["kernel_bases"] = kernels;
  j["psi"] = psi;
  j["assembled"] = to_json(r.assembled);
  j["ladder"] = r.ladder;
  j["restriction_split_surjective"] = r.restriction_split_surjective;
  return j;
}

SplittingReport splitting_report_from_json(const Json& j) {
  SplittingReport r;
  r.functor = j.at("functor").get<std::string>();
  r.n = j.at("n").get<int>();
  r.component_ranks = j.at("component_ranks").get<std::vector<std::size_t>>();
  r.determinant = big_from_json(j.at("determinant"));
  for (const auto& k : j.at("kernel_bases")) {
    const auto rows = k.at("rows").get<std::size_t>(), cols = k.at("cols").get<std::size_t>();
    r.kernel_bases.push_back(rows == 0 || cols == 0 ? ZMatrix(rows, cols) : matrix_from_json(k.at("matrix")));
  }
  for (const auto& p : j.at("psi")) r.psi.push_back(zmap_from_json(p));
  r.assembled = matrix_from_json(j.at("assembled"));
  r.ladder = j.at("ladder").get<std::vector<bool>>();
  r.restriction_split_surjective = j.at("restriction_split_surjective").get<bool>();
  return r;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["n"] = d.n;
  Json comps = Json::array();
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    Json e;
    e["k"] = k;
    e["kernel_coordinates"] = vector_json(d.kernel_coordinates[k]);
    e["element"] = vector_json(d.components[k]);
    comps.push_back(e);
  }
  j["components"] = comps;
  return j;
}

Json to_json(const AlternatingWitness& w) {
  Json j;
  j["n"] = w.n;
  j["found"] = w.found();
  Json pairs = Json::array();
  for (const auto& [a, b] : w.fused) pairs.push_back(Json::array({a.to_string(), b.to_string()}));
  j["fused_pairs"] = pairs;
  j["subgroup_classes"] = w.sub_classes;
  j["image_rank"] = w.image_rank;
  j["rank_drop"] = w.sub_classes - w.image_rank;
  j["conclusion"] = w.conclusion();
  return j;
}

Json to_json(const Morphism& m) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < m.coefficients.size(); ++i) {
    if (m.coefficients[i] == 0) continue;
    const auto& p = m.basis->pairs()[i];
    Json e;
    e["subgroup_generators"] = cycle_strings(p.subgroup->generators());
    Json images = Json::array();
    for (const Perm& s : p.subgroup->generators()) images.push_back(p.hom(s).to_string());
    e["hom_images"] = images;
    e["coefficient"] = m.coefficients[i];
    terms.push_back(e);
  }
  Json j;
  j["source"] = to_json(*m.source());
  j["target"] = to_json(*m.target());
  j["terms"] = terms;
  return j;
}

Json to_json(const Section& s) {
  Json j;
  j["n"] = s.n;
  j["solver_section"] = to_json(s.solver);
  j["solver_verified"] = s.solver_verified;
  j["splitting_section"] = to_json(s.from_splitting);
  j["splitting_verified"] = s.splitting_verified;
  return j;
}

Json to_json(const ProductSectionReport& r) {
  Json j;
  j["group"] = to_json(*r.group);
  j["n"] = r.n;
  j["product_section"] = to_json(r.product);
  j["action_identity"] = r.action_identity;
  j["category_identity"] = r.category_identity;
  return j;
}

std::string render_matrix(const ZMatrix& m, const std::string& indent) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, std::to_string(m(r, c)).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << pad(std::to_string(m(r, c)), width);
    out << '\n';
  }
  return out.str();
}

std::string render_char_table(const Json& t) {
  std::ostringstream out;
  out << "character table of group of order " << t.at("group").at("order").get<std::size_t>() << "\n";
  out << "class reps:";
  for (const auto& s : t.at("class_reps")) out << ' ' << s.get<std::string>();
  out << "\nclass sizes:";
  for (const auto& s : t.at("class_sizes")) out << ' ' << s.get<std::size_t>();
  out << '\n';
  const ZMatrix m = matrix_from_json(t.at("matrix"));
  std::vector<std::string> labels;
  std::size_t width = 0;
  for (const auto& l : t.at("labels")) {
    labels.push_back(l.dump());
    width = std::max(width, labels.back().size());
  }
  std::istringstream rows(render_matrix(m, ""));
  std::string line;
  for (std::size_t r = 0; std::getline(rows, line); ++r) {
    out << labels[r] << std::string(width - labels[r].size() + 2, ' ') << line << '\n';
  }
  return out.str();
}

std::string render_marks(const Json& j) {
  std::ostringstream out;
  out << "table of marks, group of order " << j.at("group").at("order").get<std::size_t>() << "\n";
  std::size_t i = 0;
  for (const auto& l : j.at("basis")) out << "  " << i++ << ": " << l.get<std::string>() << '\n';
  out << render_matrix(matrix_from_json(j.at("matrix")));
  return out.str();
}

std::string render_splitting(const Json& r) {
  std::ostringstream out;
  out << "functor: " << r.at("functor").get<std::string>() << ", n = " << r.at("n").get<int>() << '\n';
  out << "component ranks:";
  for (const auto& c : r.at("component_ranks")) out << ' ' << c.get<std::size_t>();
  out << "\ndeterminant: " << r.at("determinant").dump() << '\n';
  out << "ladder relation:";
  for (const auto& b : r.at("ladder")) out << ' ' << (b.get<bool>() ? "ok" : "FAIL");
  out << "\nrestriction split surjective: " << (r.at("restriction_split_surjective").get<bool>() ? "yes" : "no") << '\n';
  out << "assembled matrix:\n" << render_matrix(matrix_from_json(r.at("assembled")));
  return out.str();
}

}  // namespace finglobal
