#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rdc/graph.hpp"
#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

/// Edge x -> y iff x ∈ Δ⁻y or y ∈ Δ⁺x.
DirectedGraph oriented_hasse(const OgPoset& p);
DirectedGraph oriented_hasse(const OgPoset& p, const Subset& u);

/// Elements of dimension > k; x -> y iff Δₖ⁺(cl x) ∩ Δₖ⁻(cl y) ≠ ∅.
DirectedGraph flow_graph(const OgPoset& p, const Subset& u, int k);
/// Flowₖ induced on the maximal elements of u.
DirectedGraph max_flow_graph(const OgPoset& p, const Subset& u, int k);
/// All elements; y -> x when dim y ≤ k < dim x and y ∈ int ∂ₖ⁻x, and
/// y -> x when dim x ≤ k < dim y and x ∈ int ∂ₖ⁺y.
DirectedGraph extended_flow_graph(const OgPoset& p, const Subset& u, int k);

inline DirectedGraph flow_graph(const OgPoset& p, int k) { return flow_graph(p, p.full_subset(), k); }
inline DirectedGraph max_flow_graph(const OgPoset& p, int k) { return max_flow_graph(p, p.full_subset(), k); }
inline DirectedGraph extended_flow_graph(const OgPoset& p, int k) {
  return extended_flow_graph(p, p.full_subset(), k);
}

/// Dimension of the union of cl x ∩ cl y over distinct maximal x, y; -1 if none.
int frame_dim(const OgPoset& p, const Subset& u);
/// Least k ≥ -1 with at most one maximal element of dimension > k + 1.
int layering_dim(const OgPoset& p, const Subset& u);

/// Topological sorts of MaxFlowₖ(u).
std::vector<std::vector<ElemRef>> orderings(const OgPoset& p, const Subset& u, int k);

struct Layering {
  int k = -1;
  std::vector<Subset> layers;
};

/// All k-layerings of the molecule u, one per realisable ordering, distinct.
std::vector<Layering> layerings(Recognizer& rec, const Subset& u, int k);
/// The maximal element of dimension > k in each layer, in order.
std::vector<ElemRef> ordering_of(const OgPoset& p, const Layering& l);

}  // namespace rdc
