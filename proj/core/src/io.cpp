#include "rdc/io.hpp"

#include <fstream>
#include <sstream>

namespace rdc {

namespace {

std::vector<std::uint32_t> index_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ParseError(where + " must contain non-negative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

OgPoset diagram_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("diagram must be an object");
  if (!j.contains("elements") || !j["elements"].is_array()) throw ParseError("missing \"elements\" array");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  OgPoset::Grades grades;
  for (std::size_t d = 0; d < j["elements"].size(); ++d) {
    const auto& grade = j["elements"][d];
    if (!grade.is_array()) throw ParseError("grade " + std::to_string(d) + " must be an array");
    auto& out = grades.emplace_back();
    for (std::size_t i = 0; i < grade.size(); ++i) {
      const auto& e = grade[i];
      const std::string where = "element (" + std::to_string(d) + "," + std::to_string(i) + ")";
      if (!e.is_object() || !e.contains("in") || !e.contains("out"))
        throw ParseError(where + " needs \"in\" and \"out\"");
      out.push_back(ElementFaces{index_list(e["in"], where + " in"), index_list(e["out"], where + " out")});
    }
  }
  try {
    return OgPoset(std::move(grades), name);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

OgPoset parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return diagram_from_json(j);
}

OgPoset read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

json diagram_to_json(const OgPoset& p) {
  json j = json::object();
  if (!p.name().empty()) j["name"] = p.name();
  json grades = json::array();
  for (const auto& grade : p.grades()) {
    json g = json::array();
    for (const auto& e : grade) g.push_back({{"in", e.in}, {"out", e.out}});
    grades.push_back(std::move(g));
  }
  j["elements"] = std::move(grades);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json ref_to_json(ElemRef r) { return json::array({r.dim, r.index}); }

json refs_to_json(const std::vector<ElemRef>& refs) {
  json j = json::array();
  for (auto r : refs) j.push_back(ref_to_json(r));
  return j;
}

json subset_to_json(const OgPoset& p, const Subset& u) { return refs_to_json(member_refs(p, u)); }

json witness_to_json(const OgPoset& ambient, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Point:
      return {{"point", ref_to_json(ambient.ref(w.top))}};
    case Witness::Kind::Paste:
      return {{"paste",
               {{"k", w.k}, {"left", witness_to_json(ambient, *w.first)}, {"right", witness_to_json(ambient, *w.second)}}}};
    case Witness::Kind::Atom:
      return {{"atom",
               {{"top", ref_to_json(ambient.ref(w.top))},
                {"input", witness_to_json(ambient, *w.first)},
                {"output", witness_to_json(ambient, *w.second)}}}};
  }
  return nullptr;
}

json chain_complex_to_json(const ChainComplex& c) {
  json boundary = json::array();
  for (int n = 1; n <= c.dim(); ++n) boundary.push_back(c.matrix(n));
  return {{"basis", c.basis}, {"boundary", boundary}, {"augmentation", c.augmentation}};
}

json table_to_json(const GlobularTable& t) {
  json rows = json::array();
  for (int n = 0; n <= t.dim(); ++n) {
    json row = json::object();
    for (Sign s : kSigns) {
      json chain = json::array();
      for (auto [i, v] : t.at(n, s)) chain.push_back({i, v});
      row[std::string(1, sign_char(s))] = std::move(chain);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificate_to_json(const CycleCertificate& c) {
  json j = {{"graph", c.graph}, {"cycle", refs_to_json(c.cycle)}};
  if (c.graph != "hasse") j["k"] = c.k;
  return j;
}

json classification_to_json(const Classification& c) {
  json certs = json::array();
  for (const auto& cert : c.certificates) certs.push_back(certificate_to_json(cert));
  json stats = json::array();
  for (const auto& s : c.stats)
    stats.push_back({{"k", s.k},
                     {"flow", {{"vertices", s.flow_vertices}, {"edges", s.flow_edges}}},
                     {"extflow", {{"vertices", s.extflow_vertices}, {"edges", s.extflow_edges}}}});
  return {{"acyclic", c.acyclic}, {"strongly_dw", c.strongly_dw}, {"dw", c.dw},
          {"frame", to_string(c.frame)}, {"class", c.label}, {"certificates", certs},
          {"graphs", stats}};
}

json graph_to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.labelled_edges()) edges.push_back({ref_to_json(a), ref_to_json(b)});
  auto verts = g.vertices();
  std::sort(verts.begin(), verts.end());
  return {{"vertices", refs_to_json(verts)}, {"edges", edges}};
}

}  // namespace rdc
