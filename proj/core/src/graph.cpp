#include "rdc/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace rdc {

DirectedGraph::DirectedGraph(std::vector<ElemRef> vertices) : vertices_(std::move(vertices)) {
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!positions_.emplace(vertices_[i], i).second) throw StructureError("duplicate vertex " + vertices_[i].str());
}

std::size_t DirectedGraph::add_vertex(ElemRef v) {
  if (!positions_.emplace(v, vertices_.size()).second) throw StructureError("duplicate vertex " + v.str());
  vertices_.push_back(v);
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

void DirectedGraph::add_edge(std::size_t from, std::size_t to) {
  if (edges_.emplace(from, to).second) {
    auto& succ = adjacency_[from];
    succ.insert(std::upper_bound(succ.begin(), succ.end(), to), to);
  }
}

void DirectedGraph::add_edge(ElemRef from, ElemRef to) {
  auto a = position(from);
  auto b = position(to);
  if (!a || !b) throw ReferenceError("edge endpoint is not a vertex");
  add_edge(*a, *b);
}

std::optional<std::size_t> DirectedGraph::position(ElemRef v) const {
  auto it = positions_.find(v);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

bool DirectedGraph::has_edge(ElemRef from, ElemRef to) const {
  auto a = position(from);
  auto b = position(to);
  return a && b && edges_.count({*a, *b}) > 0;
}

DirectedGraph DirectedGraph::induced(const std::function<bool(ElemRef)>& keep) const {
  DirectedGraph g;
  std::vector<std::optional<std::size_t>> pos(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (keep(vertices_[v])) pos[v] = g.add_vertex(vertices_[v]);
  for (auto [a, b] : edges_)
    if (pos[a] && pos[b]) g.add_edge(*pos[a], *pos[b]);
  return g;
}

DirectedGraph DirectedGraph::converse() const {
  DirectedGraph g(vertices_);
  for (auto [a, b] : edges_) g.add_edge(b, a);
  return g;
}

std::vector<std::pair<ElemRef, ElemRef>> DirectedGraph::labelled_edges() const {
  std::vector<std::pair<ElemRef, ElemRef>> out;
  for (auto [a, b] : edges_) out.emplace_back(vertices_[a], vertices_[b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  // Iterative Tarjan: frames of (vertex, next successor position).
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto& succ = g.successors(v);
      if (next < succ.size()) {
        const auto w = succ[next++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      const auto finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return out;
}

std::optional<std::vector<ElemRef>> find_cycle(const DirectedGraph& g) {
  // Prefer a self-loop, then a shortest cycle through the smallest vertex of
  // the first non-trivial component.
  for (auto [a, b] : g.edges())
    if (a == b) return std::vector<ElemRef>{g.vertices()[a]};
  auto comps = strongly_connected_components(g);
  std::sort(comps.begin(), comps.end());
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    std::vector<char> in_comp(g.vertex_count(), 0);
    for (auto v : comp) in_comp[v] = 1;
    const auto start = comp.front();
    std::vector<std::size_t> parent(g.vertex_count(), SIZE_MAX);
    std::vector<std::size_t> frontier{start};
    parent[start] = start;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const auto v = frontier[head];
      for (auto w : g.successors(v)) {
        if (!in_comp[w]) continue;
        if (w == start) {
          std::vector<ElemRef> cyc;
          for (auto u = v; u != start; u = parent[u]) cyc.push_back(g.vertices()[u]);
          cyc.push_back(g.vertices()[start]);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
        if (parent[w] == SIZE_MAX) {
          parent[w] = v;
          frontier.push_back(w);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const DirectedGraph& g) { return !find_cycle(g).has_value(); }

bool contains_cycle(const DirectedGraph& g, const std::vector<ElemRef>& cycle) {
  if (cycle.empty()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool has_path(const DirectedGraph& g, ElemRef from, ElemRef to) {
  auto a = g.position(from);
  auto b = g.position(to);
  if (!a || !b) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> todo{*a};
  seen[*a] = 1;
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    if (v == *b) return true;
    for (auto w : g.successors(v))
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
  }
  return false;
}

namespace {

struct SortEnumerator {
  explicit SortEnumerator(const DirectedGraph& graph) : g(graph) {}

  const DirectedGraph& g;
  std::vector<std::size_t> order;  // vertex positions sorted by label
  std::vector<std::size_t> indegree;
  std::vector<char> used;
  std::vector<ElemRef> current;
  std::optional<std::size_t> limit;
  std::vector<std::vector<ElemRef>>* out = nullptr;
  std::size_t count = 0;

  bool done() const { return limit && count >= *limit; }

  void run() {
    if (done()) return;
    if (current.size() == g.vertex_count()) {
      ++count;
      if (out) out->push_back(current);
      return;
    }
    for (auto v : order) {
      if (used[v] || indegree[v] != 0) continue;
      used[v] = 1;
      current.push_back(g.vertices()[v]);
      for (auto w : g.successors(v)) --indegree[w];
      run();
      for (auto w : g.successors(v)) ++indegree[w];
      current.pop_back();
      used[v] = 0;
      if (done()) return;
    }
  }
};

SortEnumerator make_enumerator(const DirectedGraph& g) {
  SortEnumerator e{g};
  e.indegree.assign(g.vertex_count(), 0);
  e.used.assign(g.vertex_count(), 0);
  for (auto [a, b] : g.edges()) ++e.indegree[b];
  e.order.resize(g.vertex_count());
  for (std::size_t i = 0; i < e.order.size(); ++i) e.order[i] = i;
  std::sort(e.order.begin(), e.order.end(),
            [&](auto x, auto y) { return g.vertices()[x] < g.vertices()[y]; });
  return e;
}

}  // namespace

std::vector<std::vector<ElemRef>> topological_sorts(const DirectedGraph& g, std::optional<std::size_t> limit) {
  std::vector<std::vector<ElemRef>> out;
  auto e = make_enumerator(g);
  e.limit = limit;
  e.out = &out;
  e.run();
  return out;
}

std::size_t count_topological_sorts(const DirectedGraph& g) {
  auto e = make_enumerator(g);
  e.run();
  return e.count;
}

bool is_homomorphism(const DirectedGraph& a, const DirectedGraph& b,
                     const std::function<ElemRef(ElemRef)>& relabel) {
  for (auto [x, y] : a.labelled_edges())
    if (!b.has_edge(relabel(x), relabel(y))) return false;
  return true;
}

bool is_isomorphism(const DirectedGraph& a, const DirectedGraph& b,
                    const std::function<ElemRef(ElemRef)>& relabel) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::set<ElemRef> image;
  for (auto v : a.vertices()) {
    auto w = relabel(v);
    if (!b.position(w)) return false;
    image.insert(w);
  }
  if (image.size() != b.vertex_count()) return false;
  return is_homomorphism(a, b, relabel);
}

void write_dot(std::ostream& out, const DirectedGraph& g, const std::string& name,
               const std::function<std::string(ElemRef, ElemRef)>& edge_style) {
  auto id = [](ElemRef v) { return "\"" + v.str() + "\""; };
  out << "digraph \"" << name << "\" {\n";
  std::vector<ElemRef> verts = g.vertices();
  std::sort(verts.begin(), verts.end());
  for (auto v : verts) out << "  " << id(v) << " [label=\"" << v.str() << "\"];\n";
  for (auto [a, b] : g.labelled_edges()) {
    out << "  " << id(a) << " -> " << id(b);
    if (edge_style) {
      auto style = edge_style(a, b);
      if (!style.empty()) out << " [" << style << "]";
    }
    out << ";\n";
  }
  out << "}\n";
}

std::string to_dot(const DirectedGraph& g, const std::string& name,
                   const std::function<std::string(ElemRef, ElemRef)>& edge_style) {
  std::ostringstream os;
  write_dot(os, g, name, edge_style);
  return os.str();
}

}  // namespace rdc
