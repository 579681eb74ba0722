#include "rdc/acyclicity.hpp"

#include "rdc/flow.hpp"
#include "rdc/graph.hpp"

namespace rdc {

std::optional<CycleCertificate> hasse_cycle(const OgPoset& p) {
  if (auto c = find_cycle(oriented_hasse(p))) return CycleCertificate{"hasse", -1, std::move(*c)};
  return std::nullopt;
}

std::optional<CycleCertificate> flow_cycle(const OgPoset& p) {
  for (int k = -1; k <= p.dim(); ++k)
    if (auto c = find_cycle(flow_graph(p, k))) return CycleCertificate{"flow", k, std::move(*c)};
  return std::nullopt;
}

std::optional<CycleCertificate> extended_flow_cycle(const OgPoset& p) {
  for (int k = -1; k <= p.dim(); ++k)
    if (auto c = find_cycle(extended_flow_graph(p, k))) return CycleCertificate{"extflow", k, std::move(*c)};
  return std::nullopt;
}

bool is_acyclic(const OgPoset& p) { return !hasse_cycle(p); }
bool is_strongly_dw_acyclic(const OgPoset& p) { return !extended_flow_cycle(p); }
bool is_dw_acyclic(const OgPoset& p) { return !flow_cycle(p); }

bool is_frame_acyclic(Recognizer& rec, const Subset& u, bool exhaustive) {
  const OgPoset& p = rec.ambient();
  if (!exhaustive && dim_of(p, u) <= 3) return true;
  for (const auto& v : submolecules(rec, u))
    if (!is_acyclic(max_flow_graph(p, v, frame_dim(p, v)))) return false;
  return true;
}

bool is_frame_acyclic(const Molecule& m, bool exhaustive) {
  Recognizer rec(m.shape);
  return is_frame_acyclic(rec, m.shape.full_subset(), exhaustive);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

Verdict has_frame_acyclic_molecules(const OgPoset& p, std::size_t search_bound) {
  if (p.dim() <= 3 || is_acyclic(p)) return Verdict::Yes;
  if (is_dw_acyclic(p) && is_regular_directed_complex(p)) return Verdict::Yes;
  Recognizer rec(p);
  const auto closed = closed_subsets(p, p.dim(), search_bound);
  for (const auto& u : closed.subsets)
    if (rec.recognize(u) && !is_frame_acyclic(rec, u, true)) return Verdict::No;
  return Verdict::Unknown;
}

Classification classify(const OgPoset& p) {
  Classification c;
  auto hasse = hasse_cycle(p);
  auto ext = extended_flow_cycle(p);
  auto flow = flow_cycle(p);
  c.acyclic = !hasse;
  c.strongly_dw = !ext;
  c.dw = !flow;
  c.frame = has_frame_acyclic_molecules(p);
  for (auto* cert : {&hasse, &ext, &flow})
    if (*cert) c.certificates.push_back(**cert);
  for (int k = -1; k <= p.dim(); ++k) {
    const auto f = flow_graph(p, k);
    const auto e = extended_flow_graph(p, k);
    c.stats.push_back({k, f.vertex_count(), f.edge_count(), e.vertex_count(), e.edge_count()});
  }
  if (c.acyclic)
    c.label = "acyclic";
  else if (c.strongly_dw)
    c.label = "strongly-dw-acyclic";
  else if (c.dw)
    c.label = "dw-acyclic";
  else if (c.frame == Verdict::Yes)
    c.label = p.dim() <= 3 ? "frame-acyclic (dim <= 3)" : "frame-acyclic";
  else if (c.frame == Verdict::No)
    c.label = "not frame-acyclic";
  else
    c.label = "unknown";
  return c;
}

}  // namespace rdc
