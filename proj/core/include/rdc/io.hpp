#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "rdc/acyclicity.hpp"
#include "rdc/chain.hpp"
#include "rdc/graph.hpp"
#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

using json = nlohmann::json;

/// {"name": string?, "elements": [grade0, grade1, ...]}, each grade an array
/// of {"in": [...], "out": [...]}. Throws ParseError on malformed input.
OgPoset diagram_from_json(const json& j);
OgPoset parse_diagram(const std::string& text);
OgPoset read_diagram(const std::string& path);
json diagram_to_json(const OgPoset& p);
/// Two-space indented, trailing newline.
std::string dump(const json& j);

json ref_to_json(ElemRef r);
json refs_to_json(const std::vector<ElemRef>& refs);
json subset_to_json(const OgPoset& p, const Subset& u);

/// {"point":[d,i]}, {"paste":{"k","left","right"}}, {"atom":{"top","input","output"}}
/// with element references in the ambient poset.
json witness_to_json(const OgPoset& ambient, const Witness& w);

json chain_complex_to_json(const ChainComplex& c);
json table_to_json(const GlobularTable& t);
json certificate_to_json(const CycleCertificate& c);
json classification_to_json(const Classification& c);
json graph_to_json(const DirectedGraph& g);

}  // namespace rdc
