#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

/// A directed cycle found in one of the graphs of a poset.
struct CycleCertificate {
  std::string graph;  // "hasse", "flow" or "extflow"
  int k = -1;         // unused for "hasse"
  std::vector<ElemRef> cycle;
};

std::optional<CycleCertificate> hasse_cycle(const OgPoset& p);
/// First cyclic Flowₖ for -1 ≤ k ≤ dim p.
std::optional<CycleCertificate> flow_cycle(const OgPoset& p);
/// First cyclic ExtFlowₖ for -1 ≤ k ≤ dim p.
std::optional<CycleCertificate> extended_flow_cycle(const OgPoset& p);

bool is_acyclic(const OgPoset& p);
bool is_strongly_dw_acyclic(const OgPoset& p);
bool is_dw_acyclic(const OgPoset& p);

/// MaxFlow at the frame dimension is acyclic for every submolecule. Molecules
/// of dimension ≤ 3 pass without a search unless `exhaustive` is set.
bool is_frame_acyclic(const Molecule& m, bool exhaustive = false);
bool is_frame_acyclic(Recognizer& rec, const Subset& u, bool exhaustive = false);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

/// Semi-decision. `search_bound` caps the closed subsets inspected when none
/// of the sufficient conditions apply.
Verdict has_frame_acyclic_molecules(const OgPoset& p, std::size_t search_bound = 4096);

struct GraphStats {
  int k = -1;
  std::size_t flow_vertices = 0, flow_edges = 0;
  std::size_t extflow_vertices = 0, extflow_edges = 0;
};

struct Classification {
  bool acyclic = false;
  bool strongly_dw = false;
  bool dw = false;
  Verdict frame = Verdict::Unknown;
  std::string label;  // strongest satisfied class
  std::vector<CycleCertificate> certificates;
  std::vector<GraphStats> stats;
};

Classification classify(const OgPoset& p);

}  // namespace rdc
