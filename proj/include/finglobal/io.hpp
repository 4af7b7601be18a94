#pragma once

#include <string>

#include "json.hpp"

#include "finglobal/axioms.hpp"
#include "finglobal/burncat.hpp"
#include "finglobal/charfun.hpp"
#include "finglobal/split.hpp"

namespace finglobal {

using Json = nlohmann::ordered_json;

Json to_json(const PermGroup& g);
GroupPtr group_from_json(const Json& j);

Json to_json(const ZMatrix& m);
ZMatrix matrix_from_json(const Json& j);
Json to_json(const FreeAbelian& a);
Json to_json(const ZMap& m);
ZMap zmap_from_json(const Json& j);

/// Columns in display order.
Json to_json(const CharacterTable& t);
CharacterTable char_table_from_json(const Json& j);

Json marks_to_json(const PermGroup& g, const FreeAbelian& basis, const ZMatrix& marks);
Json to_json(const AxiomReport& r);
Json to_json(const DcfReport& r);
Json to_json(const SplittingReport& r);
SplittingReport splitting_report_from_json(const Json& j);
Json to_json(const Decomposition& d);
Json to_json(const AlternatingWitness& w);
/// Nonzero terms as {subgroup_generators, hom_images, coefficient}.
Json to_json(const Morphism& m);
Json to_json(const Section& s);
Json to_json(const ProductSectionReport& r);

/// Human-readable renderings of the JSON documents above.
std::string render_matrix(const ZMatrix& m, const std::string& indent = "  ");
std::string render_char_table(const Json& table);
std::string render_marks(const Json& marks);
std::string render_splitting(const Json& report);

}  // namespace finglobal
