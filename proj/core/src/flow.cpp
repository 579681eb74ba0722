#include "rdc/flow.hpp"

#include <algorithm>
#include <set>

namespace rdc {

namespace {

DirectedGraph graph_on(const OgPoset& p, const Subset& vertices) {
  return DirectedGraph(member_refs(p, vertices));
}

Subset above(const OgPoset& p, const Subset& u, int k) {
  Subset out = p.empty_subset();
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x))
    if (p.dim_of(x) > k) out.set(x);
  return out;
}

}  // namespace

DirectedGraph oriented_hasse(const OgPoset& p) { return oriented_hasse(p, p.full_subset()); }

DirectedGraph oriented_hasse(const OgPoset& p, const Subset& u) {
  DirectedGraph g = graph_on(p, u);
  for (auto y = u.find_first(); y != Subset::npos; y = u.find_next(y)) {
    for (auto x : p.faces_flat(y, Sign::Minus))
      if (u.test(x)) g.add_edge(p.ref(x), p.ref(y));
    for (auto x : p.faces_flat(y, Sign::Plus))
      if (u.test(x)) g.add_edge(p.ref(y), p.ref(x));
  }
  return g;
}

DirectedGraph flow_graph(const OgPoset& p, const Subset& u, int k) {
  const Subset verts = above(p, u, k);
  DirectedGraph g = graph_on(p, verts);
  if (k < 0) return g;
  // For each k-dimensional element z: who has it as an output k-face, who as an input.
  std::vector<std::vector<std::size_t>> outputs(p.size()), inputs(p.size());
  for (auto x = verts.find_first(); x != Subset::npos; x = verts.find_next(x)) {
    const Subset c = closure_of(p, x);
    const Subset plus = boundary_faces(p, c, k, Sign::Plus);
    const Subset minus = boundary_faces(p, c, k, Sign::Minus);
    for (auto z = plus.find_first(); z != Subset::npos; z = plus.find_next(z)) outputs[z].push_back(x);
    for (auto z = minus.find_first(); z != Subset::npos; z = minus.find_next(z)) inputs[z].push_back(x);
  }
  for (std::size_t z = 0; z < p.size(); ++z)
    for (auto x : outputs[z])
      for (auto y : inputs[z]) g.add_edge(p.ref(x), p.ref(y));
  return g;
}

DirectedGraph max_flow_graph(const OgPoset& p, const Subset& u, int k) {
  const Subset top = maximal(p, u);
  const auto g = flow_graph(p, u, k);
  return g.induced([&](ElemRef v) { return top.test(p.flat(v)); });
}

DirectedGraph extended_flow_graph(const OgPoset& p, const Subset& u, int k) {
  DirectedGraph g = graph_on(p, u);
  if (k < 0) return g;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) {
    if (p.dim_of(x) <= k) continue;
    const Subset c = closure_of(p, x);
    const Subset in = interior(p, boundary(p, c, k, Sign::Minus));
    const Subset out = interior(p, boundary(p, c, k, Sign::Plus));
    for (auto y = in.find_first(); y != Subset::npos; y = in.find_next(y)) g.add_edge(p.ref(y), p.ref(x));
    for (auto y = out.find_first(); y != Subset::npos; y = out.find_next(y)) g.add_edge(p.ref(x), p.ref(y));
  }
  return g;
}

int frame_dim(const OgPoset& p, const Subset& u) {
  const auto top = members(maximal(p, u));
  std::vector<Subset> cl;
  for (auto x : top) cl.push_back(closure_of(p, x));
  Subset meet = p.empty_subset();
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j) meet |= cl[i] & cl[j];
  return dim_of(p, meet);
}

int layering_dim(const OgPoset& p, const Subset& u) {
  const auto top = members(maximal(p, u));
  for (int k = -1;; ++k) {
    const auto n = std::count_if(top.begin(), top.end(), [&](auto x) { return p.dim_of(x) > k + 1; });
    if (n <= 1) return k;
  }
}

std::vector<std::vector<ElemRef>> orderings(const OgPoset& p, const Subset& u, int k) {
  return topological_sorts(max_flow_graph(p, u, k));
}

std::vector<Layering> layerings(Recognizer& rec, const Subset& u, int k) {
  const OgPoset& p = rec.ambient();
  std::vector<Layering> out;
  std::set<std::vector<Subset>> seen;
  for (const auto& order : orderings(p, u, k)) {
    if (k < 0 && order.size() > 1) break;
    std::vector<std::size_t> flat;
    for (auto r : order) flat.push_back(p.flat(r));
    auto layers = rec.realize_layering(u, k, flat);
    if (!layers || !seen.insert(*layers).second) continue;
    out.push_back(Layering{k, std::move(*layers)});
  }
  return out;
}

std::vector<ElemRef> ordering_of(const OgPoset& p, const Layering& l) {
  std::vector<ElemRef> out;
  for (const auto& layer : l.layers) {
    const Subset top = maximal(p, layer);
    for (auto x = top.find_first(); x != Subset::npos; x = top.find_next(x))
      if (p.dim_of(x) > l.k) out.push_back(p.ref(x));
  }
  return out;
}

}  // namespace rdc
