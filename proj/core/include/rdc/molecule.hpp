#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

// Boundaries -----------------------------------------------------------------

/// Δₙᵅ U: n-dimensional members of u with no (−α)-coface in u.
Subset boundary_faces(const OgPoset& p, const Subset& u, int n, Sign s);
/// ∂ₙᵅ U. Empty for n < 0.
Subset boundary(const OgPoset& p, const Subset& u, int n, Sign s);
/// ∂ₙ U = ∂ₙ⁺ U ∪ ∂ₙ⁻ U.
Subset boundary(const OgPoset& p, const Subset& u, int n);
/// u minus ∂_{dim u − 1} u.
Subset interior(const OgPoset& p, const Subset& u);

bool is_globular(const OgPoset& p, const Subset& u);
bool is_round(const OgPoset& p, const Subset& u);
inline bool is_globular(const OgPoset& p) { return is_globular(p, p.full_subset()); }
inline bool is_round(const OgPoset& p) { return is_round(p, p.full_subset()); }

// Witnesses ------------------------------------------------------------------

/// Derivation tree of a molecule. Every node is a closed subset of one
/// ambient poset; the gluing isomorphisms of its Paste and Atom nodes are the
/// identity on the shared boundary.
struct Witness {
  enum class Kind { Point, Paste, Atom };

  Kind kind = Kind::Point;
  Subset support;
  int k = -1;             // pasting dimension (Paste)
  std::size_t top = 0;    // the element itself (Point) or greatest element (Atom)
  std::shared_ptr<const Witness> first;   // left factor or input side
  std::shared_ptr<const Witness> second;  // right factor or output side
};
using WitnessPtr = std::shared_ptr<const Witness>;

/// Transports a witness along an injective map of flat indices.
WitnessPtr transport(const WitnessPtr& w, const std::vector<std::size_t>& map, std::size_t target_size);
/// Number of nodes in the tree.
std::size_t witness_size(const Witness& w);

/// A standalone molecule with its derivation.
struct Molecule {
  OgPoset shape;
  WitnessPtr witness;

  int dim() const { return shape.dim(); }
  std::size_t size() const { return shape.size(); }
};

// Constructors ---------------------------------------------------------------

Molecule point();
/// Pasting at the k-boundary. Throws RangeError unless k < min(dim u, dim v),
/// CompositionError when ∂ₖ⁺u and ∂ₖ⁻v are not isomorphic.
Molecule paste(const Molecule& u, const Molecule& v, int k);
/// Rewrite of u into v. Throws CompositionError when the sides are not round
/// molecules of equal dimension with matching boundaries.
Molecule atom(const Molecule& u, const Molecule& v);

/// Element maps of a pasting, for callers that need the two inclusions.
struct PasteResult {
  Molecule molecule;
  std::vector<std::size_t> left_map;   // flat in u -> flat in result
  std::vector<std::size_t> right_map;  // flat in v -> flat in result
};
PasteResult paste_with_maps(const Molecule& u, const Molecule& v, int k);

// Isomorphisms ---------------------------------------------------------------

/// Up to `limit` isomorphisms a -> b found by propagation and backtracking.
std::vector<OgMap> find_isomorphisms(const OgPoset& a, const OgPoset& b, std::size_t limit);
std::optional<OgMap> find_isomorphism(const OgPoset& a, const OgPoset& b);

/// The isomorphism between two molecules, if any. With `exhaustive` the
/// search continues past the first completion and throws StructureError if
/// a second one exists.
std::optional<OgMap> unique_molecule_iso(const Molecule& u, const Molecule& v, bool exhaustive = false);

// Recognition ----------------------------------------------------------------

/// Molecule recognition over closed subsets of a fixed ambient poset, with a
/// per-instance memo table. Not thread-safe; use one per thread.
class Recognizer {
 public:
  explicit Recognizer(const OgPoset& ambient) : p_(ambient) {}
  explicit Recognizer(OgPoset&&) = delete;

  const OgPoset& ambient() const { return p_; }

  /// Witness if the closed subset u is a molecule, otherwise null.
  WitnessPtr recognize(const Subset& u);
  WitnessPtr recognize_all() { return recognize(p_.full_subset()); }

  /// Greedy layer realisation for a given order of the maximal elements of
  /// dimension > k. Returns the layers, or nothing if the order is not
  /// realised by a k-layering.
  std::optional<std::vector<Subset>> realize_layering(const Subset& u, int k,
                                                      const std::vector<std::size_t>& order);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  WitnessPtr recognize_atom(const Subset& u, std::size_t top, int d);
  WitnessPtr recognize_layered(const Subset& u, int k);

  const OgPoset& p_;
  std::unordered_map<Subset, WitnessPtr> memo_;
};

/// Witness-carrying molecule if p is (isomorphic to) a molecule.
std::optional<Molecule> is_molecule(const OgPoset& p);
bool is_atom(const OgPoset& p);
/// Every cl{x} is an atom.
bool is_regular_directed_complex(const OgPoset& p);

/// Rebuilds the poset described by a witness from point/paste/atom only.
Molecule rebuild(const OgPoset& ambient, const Witness& w);

// Submolecules ---------------------------------------------------------------

/// All factors of iterated pasting decompositions of u, including u, its
/// boundaries, and every 0-dimensional singleton. Sorted.
std::vector<Subset> submolecules(Recognizer& rec, const Subset& u);
std::vector<Subset> submolecules(const Molecule& m);

}  // namespace rdc
