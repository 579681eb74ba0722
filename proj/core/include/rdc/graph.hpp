#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

/// Directed graph whose vertices are poset elements, kept in a fixed order.
/// Edges are pairs of vertex positions; self-loops are allowed.
class DirectedGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  DirectedGraph() = default;
  explicit DirectedGraph(std::vector<ElemRef> vertices);

  std::size_t add_vertex(ElemRef v);
  void add_edge(std::size_t from, std::size_t to);
  void add_edge(ElemRef from, ElemRef to);

  const std::vector<ElemRef>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::optional<std::size_t> position(ElemRef v) const;
  bool has_edge(ElemRef from, ElemRef to) const;
  const std::vector<std::size_t>& successors(std::size_t v) const { return adjacency_[v]; }

  /// Induced subgraph on the vertices satisfying keep.
  DirectedGraph induced(const std::function<bool(ElemRef)>& keep) const;
  /// Same vertices, every edge reversed.
  DirectedGraph converse() const;

  /// Edges as pairs of vertex labels, sorted.
  std::vector<std::pair<ElemRef, ElemRef>> labelled_edges() const;

 private:
  std::vector<ElemRef> vertices_;
  std::map<ElemRef, std::size_t> positions_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::set<Edge> edges_;
};

/// Strongly connected components (Tarjan), each sorted, in reverse
/// topological order of the condensation.
std::vector<std::vector<std::size_t>> strongly_connected_components(const DirectedGraph& g);

/// One directed cycle as a vertex sequence (first vertex not repeated), or
/// nothing if the graph is acyclic.
std::optional<std::vector<ElemRef>> find_cycle(const DirectedGraph& g);
bool is_acyclic(const DirectedGraph& g);
/// True if v0 -> v1 -> ... -> v0 are all edges.
bool contains_cycle(const DirectedGraph& g, const std::vector<ElemRef>& cycle);
/// Reachability from `from` to `to` along at least zero edges.
bool has_path(const DirectedGraph& g, ElemRef from, ElemRef to);

/// All topological sorts in lexicographic vertex order. Stops after `limit`
/// sorts when a limit is given.
std::vector<std::vector<ElemRef>> topological_sorts(const DirectedGraph& g,
                                                    std::optional<std::size_t> limit = std::nullopt);
std::size_t count_topological_sorts(const DirectedGraph& g);

/// Checks that `relabel` is a bijection of vertex sets carrying edges onto
/// edges exactly.
bool is_isomorphism(const DirectedGraph& a, const DirectedGraph& b,
                    const std::function<ElemRef(ElemRef)>& relabel);
/// Checks that `relabel` maps every edge of a to an edge of b.
bool is_homomorphism(const DirectedGraph& a, const DirectedGraph& b,
                     const std::function<ElemRef(ElemRef)>& relabel);

/// Graphviz DOT. Vertices are labelled "(dim,index)". When an edge style
/// callback is given its result is placed inside the edge's attribute list.
void write_dot(std::ostream& out, const DirectedGraph& g, const std::string& name,
               const std::function<std::string(ElemRef, ElemRef)>& edge_style = {});
std::string to_dot(const DirectedGraph& g, const std::string& name,
                   const std::function<std::string(ElemRef, ElemRef)>& edge_style = {});

}  // namespace rdc
