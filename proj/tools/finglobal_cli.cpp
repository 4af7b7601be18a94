#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "finglobal/axioms.hpp"
#include "finglobal/burncat.hpp"
#include "finglobal/burnside.hpp"
#include "finglobal/config.hpp"
#include "finglobal/errors.hpp"
#include "finglobal/io.hpp"
#include "finglobal/repring.hpp"
#include "finglobal/split.hpp"

using namespace finglobal;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string functor = "burnside";
  std::string group;
  std::string element;
  std::string product_group;
  std::string family = "alternating";
  std::string range = "5..8";
  int n = 0;
  int k = 0;
  int max_n = 4;
  bool all_subgroups = false;
};

std::unique_ptr<GlobalFunctor> make_functor(const std::string& name, const Config& config) {
  if (name == "burnside") return std::make_unique<BurnsideFunctor>(config.limits());
  if (name == "repring") return std::make_unique<RepRingFunctor>();
  throw InvalidInput("unknown functor " + name);
}

std::string vector_text(const ZVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

// Each command fills `doc`, writes its text form to `text` and returns the exit code.
struct Output {
  Json doc;
  std::ostringstream text;
  int code = 0;
};

void cmd_marks(const Options& o, const Config& c, const Cache& cache, Output& out) {
  const std::string key = o.group;
  auto cached = cache.load("marks", key);
  if (cached) {
    out.doc = *cached;
  } else {
    GroupPtr g = parse_group_spec(o.group, c.limits());
    BurnsideFunctor a(c.limits());
    out.doc = marks_to_json(*g, a.value(g), a.marks(g));
    cache.store("marks", key, out.doc);
  }
  out.text << render_marks(out.doc);
}

void cmd_functor_value(const Options& o, const Config& c, Output& out) {
  GroupPtr g = parse_group_spec(o.group, c.limits());
  auto f = make_functor(o.functor, c);
  const FreeAbelian v = f->value(g);
  out.doc["functor"] = f->name();
  out.doc["group"] = to_json(*g);
  out.doc["rank"] = v.rank();
  out.doc["basis"] = to_json(v);
  out.text << f->name() << " value at group of order " << g->order() << ": rank " << v.rank() << '\n';
  for (std::size_t i = 0; i < v.rank(); ++i) out.text << "  " << i << ": " << v.labels[i] << '\n';
}

void cmd_verify_axioms(const Options& o, const Config& c, Output& out) {
  auto f = make_functor(o.functor, c);
  const AxiomReport r = verify_axioms(*f, standard_probe(o.max_n, o.all_subgroups));
  out.doc = to_json(r);
  for (const auto& rel : r.relations) {
    out.text << rel.relation << ": " << (rel.passed() ? "pass" : "FAIL") << " (" << rel.checks << " checks)\n";
    if (!rel.passed()) {
      out.text << "  first counterexample: " << rel.counterexample << '\n';
      if (rel.column) out.text << "  differs on basis vector " << *rel.column << '\n';
      if (rel.difference) out.text << render_matrix(*rel.difference, "    ");
    }
  }
  if (!r.passed()) out.code = kCheckFailed;
}

void cmd_dcf(const Options& o, const Config& c, Output& out) {
  auto f = make_functor(o.functor, c);
  SplittingEngine engine(*f);
  const DcfReport r = engine.verify_dcf(o.k, o.n);
  out.doc = to_json(r);
  if (r.equal) {
    out.text << "EQUAL\n";
  } else {
    out.text << "DIFFERENT";
    if (r.first_differing_column) out.text << " at column " << *r.first_differing_column;
    out.text << "\nlhs:\n" << render_matrix(r.lhs) << "rhs:\n" << render_matrix(r.rhs);
    out.code = kCheckFailed;
  }
}

void cmd_split(const Options& o, const Config& c, Output& out) {
  auto f = make_functor(o.functor, c);
  SplittingEngine engine(*f);
  out.doc = to_json(engine.report(o.n));
  out.text << render_splitting(out.doc);
}

void cmd_decompose(const Options& o, const Config& c, Output& out) {
  auto f = make_functor(o.functor, c);
  SplittingEngine engine(*f);
  const std::size_t rank = f->value(symmetric_group(o.n)).rank();
  ZVector x;
  if (o.element.empty()) {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> dist(-10, 10);
    for (std::size_t i = 0; i < rank; ++i) x.push_back(dist(rng));
  } else {
    try {
      x = Json::parse(o.element).get<ZVector>();
    } catch (const Json::exception&) {
      throw InvalidInput("--element must be a JSON array of integers");
    }
  }
  const Decomposition d = engine.decompose(o.n, x);
  const bool round_trip = engine.assemble(o.n, d.kernel_coordinates) == x;
  out.doc["element"] = x;
  out.doc["decomposition"] = to_json(d);
  out.doc["reassembles"] = round_trip;
  out.text << "x = " << vector_text(x) << '\n';
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    out.text << "s_" << k << " = " << vector_text(d.components[k]) << "  (kernel coordinates "
             << vector_text(d.kernel_coordinates[k]) << ")\n";
  }
  out.text << "reassembles: " << (round_trip ? "yes" : "no") << '\n';
  if (!round_trip) out.code = kCheckFailed;
}

void cmd_section(const Options& o, const Config& c, Output& out) {
  BurnsideCategory cat(c.limits());
  const Section s = section_of_restriction(cat, o.n);
  out.doc = to_json(s);
  out.text << "section of i_" << o.n << "^*: solver section " << (s.solver_verified ? "verified" : "FAILED")
           << ", splitting section " << (s.splitting_verified ? "verified" : "FAILED") << '\n';
  out.text << "solver section terms: " << out.doc["solver_section"]["terms"].size()
           << ", splitting section terms: " << out.doc["splitting_section"]["terms"].size() << '\n';
  if (!s.solver_verified || !s.splitting_verified) out.code = kCheckFailed;
  if (!o.product_group.empty()) {
    GroupPtr g = parse_group_spec(o.product_group, c.limits());
    const ProductSectionReport p = product_section(cat, g, s.solver, o.n);
    out.doc["product"] = to_json(p);
    out.text << "product with " << o.product_group << ": action " << (p.action_identity ? "identity" : "FAILED")
             << ", category " << (p.category_identity ? "identity" : "FAILED") << '\n';
    if (!p.action_identity || !p.category_identity) out.code = kCheckFailed;
  }
}

void cmd_fusion(const Options& o, const Config&, Output& out) {
  if (o.family != "alternating") throw InvalidInput("only the alternating family is supported");
  const auto [lo, hi] = parse_range(o.range);
  out.doc = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const AlternatingWitness w = non_splitting_witness_alternating(n);
    out.doc.push_back(to_json(w));
    out.text << "n = " << n << ": ";
    if (w.found()) {
      out.text << "fused " << w.fused.front().first.to_string() << " ~ " << w.fused.front().second.to_string() << " ("
               << w.fused.size() << " pair" << (w.fused.size() > 1 ? "s" : "") << "), rank " << w.sub_classes
               << " -> " << w.image_rank << '\n';
    } else {
      out.text << w.conclusion() << '\n';
    }
  }
}

void cmd_char_table(const Options& o, const Config&, const Cache& cache, Output& out) {
  const std::string key = "symmetric-" + std::to_string(o.n);
  auto cached = cache.load("char_table", key);
  if (cached) {
    out.doc = *cached;
  } else {
    out.doc = to_json(char_table_symmetric(o.n));
    cache.store("char_table", key, out.doc);
  }
  out.text << render_char_table(out.doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global functors on finite groups: splittings, Burnside category sections, character tables"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  try {
    config = config_from_environment();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::string output = "text";
  std::string cache_dir = config.cache_dir ? config.cache_dir->string() : "";
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "directory for cached tables (empty disables)");
  app.add_option("--max-group-order", config.max_group_order)->check(CLI::PositiveNumber);
  app.add_option("--max-lattice-order", config.max_lattice_order)->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed);

  Options o;
  auto functor_opt = [&](CLI::App* sub) {
    sub->add_option("--functor", o.functor)->required()->check(CLI::IsMember({"burnside", "repring"}));
  };

  auto* marks = app.add_subcommand("marks", "table of marks of a group");
  marks->add_option("--group", o.group)->required();
  auto* value = app.add_subcommand("functor-value", "basis and rank of F(G)");
  functor_opt(value);
  value->add_option("--group", o.group)->required();
  auto* axioms = app.add_subcommand("verify-axioms", "check the global functor relations on a probe set");
  functor_opt(axioms);
  axioms->add_option("--max-n", o.max_n)->check(CLI::Range(1, 6));
  axioms->add_flag("--all-subgroups", o.all_subgroups, "probe every subgroup class, not only Young subgroups");
  auto* dcf = app.add_subcommand("dcf", "check the symmetric double coset formula");
  functor_opt(dcf);
  dcf->add_option("--n", o.n)->required();
  dcf->add_option("--k", o.k)->required();
  auto* split = app.add_subcommand("split", "splitting report for F(Σ_n)");
  functor_opt(split);
  split->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  auto* decompose = app.add_subcommand("decompose", "components s_0..s_n of an element of F(Σ_n)");
  functor_opt(decompose);
  decompose->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  decompose->add_option("--element", o.element, "JSON integer vector; random from --seed if omitted");
  auto* section = app.add_subcommand("section", "section of i_n^* in the Burnside category");
  section->add_option("--n", o.n)->required();
  section->add_option("--with-product-group", o.product_group);
  auto* fusion = app.add_subcommand("fusion", "fusion witnesses for alternating groups");
  fusion->add_option("--family", o.family);
  fusion->add_option("--n-range", o.range);
  auto* table = app.add_subcommand("char-table", "character table of Σ_n");
  table->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  config.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  config.cache_dir.reset();
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  const Cache cache(config.cache_dir);
  if (!cache.warning().empty()) std::cerr << "warning: " << cache.warning() << '\n';

  Output out;
  try {
    if (*marks) cmd_marks(o, config, cache, out);
    else if (*value) cmd_functor_value(o, config, out);
    else if (*axioms) cmd_verify_axioms(o, config, out);
    else if (*dcf) cmd_dcf(o, config, out);
    else if (*split) cmd_split(o, config, out);
    else if (*decompose) cmd_decompose(o, config, out);
    else if (*section) cmd_section(o, config, out);
    else if (*fusion) cmd_fusion(o, config, out);
    else if (*table) cmd_char_table(o, config, cache, out);
  } catch (const Inconsistency& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (config.output == OutputFormat::json) {
    std::cout << out.doc.dump(2) << '\n';
  } else {
    std::cout << out.text.str();
  }
  return out.code;
}
