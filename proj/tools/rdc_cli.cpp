#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdc/rdc.hpp"

namespace {

using namespace rdc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  bool pretty = false;
  std::string file, second, out, sign = "both", graph = "hasse";
  int dim = 0, k = 0, max_dim = 2;
  std::size_t bound = 2;
  std::vector<int> dims;
};

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

void emit(const json& j, const std::string& path = {}) { write_text(dump(j), path); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Options& o) {
  const auto p = read_diagram(o.file);
  json sizes = json::array();
  for (int d = 0; d <= p.dim(); ++d) sizes.push_back(p.grade_size(d));
  const bool rdc = is_regular_directed_complex(p);
  const bool thin = is_oriented_thin(augment(p));
  const bool molecule = rdc && Recognizer(p).recognize_all() != nullptr;
  if (o.pretty) {
    std::cout << "dim          " << p.dim() << "\n"
              << "grade sizes  " << sizes.dump() << "\n"
              << "rdc          " << yes_no(rdc) << "\n"
              << "thin         " << yes_no(thin) << "\n"
              << "molecule     " << yes_no(molecule) << "\n";
  } else {
    emit({{"dim", p.dim()}, {"sizes", sizes}, {"rdc", rdc}, {"thin", thin}, {"molecule", molecule}});
  }
  return rdc && thin ? kOk : kFailed;
}

int cmd_classify(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto c = classify(p);
  if (!o.pretty) {
    emit(classification_to_json(c));
    return kOk;
  }
  std::cout << "class                " << c.label << "\n"
            << "acyclic              " << yes_no(c.acyclic) << "\n"
            << "strongly dw-acyclic  " << yes_no(c.strongly_dw) << "\n"
            << "dw-acyclic           " << yes_no(c.dw) << "\n"
            << "frame-acyclic        " << to_string(c.frame) << "\n";
  for (const auto& cert : c.certificates) {
    std::cout << "cycle in " << cert.graph;
    if (cert.graph != "hasse") std::cout << "_" << cert.k;
    std::cout << ":";
    for (auto v : cert.cycle) std::cout << " " << v.str();
    std::cout << "\n";
  }
  std::cout << "\n   k  flow(v/e)  extflow(v/e)\n";
  for (const auto& s : c.stats) {
    std::ostringstream f, e;
    f << s.flow_vertices << "/" << s.flow_edges;
    e << s.extflow_vertices << "/" << s.extflow_edges;
    std::cout << std::setw(4) << s.k << "  " << std::setw(9) << f.str() << "  " << std::setw(12) << e.str() << "\n";
  }
  return kOk;
}

int cmd_boundary(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto all = p.full_subset();
  json j = json::object();
  for (Sign s : kSigns)
    if (o.sign == "both" || o.sign == std::string(1, sign_char(s)))
      j[std::string(1, sign_char(s))] = subset_to_json(p, boundary(p, all, o.dim, s));
  emit(o.sign == "both" ? j : j.begin().value());
  return kOk;
}

int cmd_layerings(const Options& o) {
  const auto p = read_diagram(o.file);
  Recognizer rec(p);
  if (!rec.recognize_all()) {
    emit({{"molecule", false}});
    return kFailed;
  }
  const auto ls = layerings(rec, p.full_subset(), o.k);
  json items = json::array();
  for (const auto& l : ls) {
    json layers = json::array();
    for (const auto& layer : l.layers) layers.push_back(subset_to_json(p, layer));
    items.push_back({{"ordering", refs_to_json(ordering_of(p, l))}, {"layers", layers}});
  }
  emit({{"k", o.k}, {"count", ls.size()}, {"layerings", items}});
  return kOk;
}

int cmd_orderings(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto os = orderings(p, p.full_subset(), o.k);
  json items = json::array();
  for (const auto& ord : os) items.push_back(refs_to_json(ord));
  emit({{"k", o.k}, {"count", os.size()}, {"orderings", items}});
  return kOk;
}

int cmd_molecule(const Options& o) {
  const auto p = read_diagram(o.file);
  Recognizer rec(p);
  const auto w = rec.recognize_all();
  if (o.pretty) {
    std::cout << "molecule  " << yes_no(w != nullptr) << "\n";
    if (w) std::cout << "atom      " << yes_no(w->kind != Witness::Kind::Paste) << "\n"
                     << "witness   " << witness_size(*w) << " nodes\n";
    return w ? kOk : kFailed;
  }
  if (!w) {
    emit({{"molecule", false}});
    return kFailed;
  }
  emit({{"molecule", true},
        {"atom", w->kind != Witness::Kind::Paste},
        {"dim", p.dim()},
        {"witness_size", witness_size(*w)},
        {"witness", witness_to_json(p, *w)}});
  return kOk;
}

std::optional<Molecule> molecule_or_report(const std::string& path) {
  auto m = is_molecule(read_diagram(path));
  if (!m) std::cerr << path << ": not a molecule\n";
  return m;
}

int cmd_paste(const Options& o) {
  const auto a = molecule_or_report(o.file);
  const auto b = molecule_or_report(o.second);
  if (!a || !b) return kFailed;
  emit(diagram_to_json(paste(*a, *b, o.k).shape), o.out);
  return kOk;
}

int cmd_gray(const Options& o) {
  emit(diagram_to_json(gray(read_diagram(o.file), read_diagram(o.second))), o.out);
  return kOk;
}

int cmd_join(const Options& o) {
  emit(diagram_to_json(join(read_diagram(o.file), read_diagram(o.second))), o.out);
  return kOk;
}

int cmd_susp(const Options& o) {
  emit(diagram_to_json(suspension(read_diagram(o.file))), o.out);
  return kOk;
}

int cmd_dual(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto q = o.dims.empty() ? total_dual(p) : dual(p, std::set<int>(o.dims.begin(), o.dims.end()));
  emit(diagram_to_json(q), o.out);
  return kOk;
}

int cmd_cells(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto e = enumerate_cells(p, o.max_dim, o.bound);
  if (o.pretty) {
    std::cout << "cells     " << e.cells.size() << (e.complete ? "" : " (partial)") << "\n";
    std::vector<std::size_t> per_dim;
    for (const auto& c : e.cells) {
      if (per_dim.size() <= static_cast<std::size_t>(c.dim())) per_dim.resize(c.dim() + 1);
      ++per_dim[c.dim()];
    }
    for (std::size_t d = 0; d < per_dim.size(); ++d) std::cout << "  dim " << d << "   " << per_dim[d] << "\n";
    return kOk;
  }
  json items = json::array();
  for (const auto& c : e.cells) {
    std::set<ElemRef> image;
    for (auto y : c.map.assignment) image.insert(p.ref(y));
    items.push_back({{"dim", c.dim()},
                     {"size", c.shape.size()},
                     {"injective", c.injective()},
                     {"image", refs_to_json({image.begin(), image.end()})}});
  }
  emit({{"complete", e.complete}, {"count", e.cells.size()}, {"cells", items}});
  return kOk;
}

int cmd_chain(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto c = linearize(p);
  auto j = chain_complex_to_json(c);
  j["unital"] = is_unital_basis(c);
  j["steiner"] = is_steiner(c);
  j["strong_steiner"] = is_strong_steiner(c);
  emit(j);
  return kOk;
}

int cmd_compare_nu(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto r = compare_molec_nu(p, o.max_dim, o.bound);
  if (o.pretty) {
    std::cout << "cells         " << r.cells << (r.complete ? "" : " (partial)") << "\n"
              << "tables        " << r.tables << "\n"
              << "isomorphic    " << yes_no(r.isomorphic()) << "\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    return kOk;
  }
  emit({{"cells", r.cells},
        {"tables", r.tables},
        {"complete", r.complete},
        {"valid_tables", r.valid_tables},
        {"injective", r.injective},
        {"surjective", r.surjective},
        {"boundaries_commute", r.boundaries_commute},
        {"compositions_commute", r.compositions_commute},
        {"isomorphic", r.isomorphic()},
        {"notes", r.notes}});
  return kOk;
}

int cmd_dot(const Options& o) {
  const auto p = read_diagram(o.file);
  const auto colon = o.graph.find(':');
  const std::string kind = o.graph.substr(0, colon);
  int k = 0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      k = std::stoi(o.graph.substr(colon + 1), &used);
      if (used != o.graph.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad graph dimension in " + o.graph);
    }
  }
  if (kind == "hasse" && colon == std::string::npos) {
    auto style = [&](ElemRef a, ElemRef b) -> std::string {
      if (a.dim + 1 != b.dim) return {};
      const auto in = p.faces(b, Sign::Minus);
      return std::find(in.begin(), in.end(), a) != in.end() ? "style=dashed" : "";
    };
    write_dot(std::cout, oriented_hasse(p), "hasse", style);
    return kOk;
  }
  if (colon == std::string::npos) throw ParseError("graph " + o.graph + " needs a dimension");
  const std::string name = kind + "_" + std::to_string(k);
  if (kind == "flow")
    write_dot(std::cout, flow_graph(p, k), name);
  else if (kind == "maxflow")
    write_dot(std::cout, max_flow_graph(p, k), name);
  else if (kind == "extflow")
    write_dot(std::cout, extended_flow_graph(p, k), name);
  else
    throw ParseError("unknown graph " + o.graph);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular directed complexes: molecules, acyclicity, constructions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable output where available");

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto command = [&](const char* name, const char* help, int (*run)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, run);
    return sub;
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Diagram JSON")->required();
    return sub;
  };
  auto with_pair = [&](CLI::App* sub) {
    with_file(sub);
    sub->add_option("second", o.second, "Second diagram JSON")->required();
    sub->add_option("-o,--out", o.out, "Output file");
    return sub;
  };

  with_file(command("validate", "Check the poset, regularity and thinness", cmd_validate));
  with_file(command("classify", "Acyclicity classes with cycle certificates", cmd_classify));
  auto* bnd = with_file(command("boundary", "Input and output boundaries", cmd_boundary));
  bnd->add_option("--dim", o.dim, "Boundary dimension")->required();
  bnd->add_option("--sign", o.sign, "-, + or both")->check(CLI::IsMember({"-", "+", "both"}));
  with_file(command("layerings", "k-layerings of a molecule", cmd_layerings))
      ->add_option("--k", o.k, "Layering dimension")->required();
  with_file(command("orderings", "Topological sorts of the maximal flow graph", cmd_orderings))
      ->add_option("--k", o.k, "Flow dimension")->required();
  with_file(command("molecule", "Recognise a molecule and print its witness", cmd_molecule));
  with_pair(command("paste", "Paste two molecules", cmd_paste))->add_option("--k", o.k, "Pasting dimension")->required();
  with_pair(command("gray", "Gray product", cmd_gray));
  with_pair(command("join", "Join", cmd_join));
  with_file(command("susp", "Suspension", cmd_susp))->add_option("-o,--out", o.out, "Output file");
  auto* dl = with_file(command("dual", "Dual in the listed dimensions, total without --dims", cmd_dual));
  dl->add_option("--dims", o.dims, "Comma-separated dimensions")->delimiter(',');
  dl->add_option("-o,--out", o.out, "Output file");
  auto* cl = with_file(command("cells", "Enumerate molecules over the diagram", cmd_cells));
  cl->add_option("--max-dim", o.max_dim, "Largest cell dimension")->required();
  cl->add_option("--bound", o.bound, "Composition rounds when enumeration is partial");
  with_file(command("chain", "Chain complex export and Steiner verdicts", cmd_chain));
  auto* nu = with_file(command("compare-nu", "Compare cells with generated globular tables", cmd_compare_nu));
  nu->add_option("--max-dim", o.max_dim, "Largest cell dimension")->required();
  nu->add_option("--bound", o.bound, "Composition rounds when enumeration is partial");
  with_file(command("dot", "Graphviz export of a graph", cmd_dot))
      ->add_option("--graph", o.graph, "hasse, flow:K, maxflow:K or extflow:K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    for (auto& [sub, run] : commands)
      if (sub->parsed()) return run(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kFailed;
}
