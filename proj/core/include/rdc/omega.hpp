#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

/// A molecule over P: a shape with a morphism into P. Equality is up to an
/// isomorphism of shapes commuting with the maps.
struct Cell {
  Molecule shape;
  OgMap map;

  int dim() const { return shape.dim(); }
  bool injective() const;
  /// Hash-like key; equal cells have equal keys.
  std::string key() const;
};

/// The inclusion of a closed subset of p; throws StructureError if u is not a molecule.
Cell subset_cell(const OgPoset& p, const Subset& u);
Cell subset_cell(Recognizer& rec, const Subset& u);

bool same_cell(const Cell& a, const Cell& b);
Cell cell_boundary(const Cell& c, int k, Sign s);
/// k-composite. Lower-dimensional operands act as units. Throws
/// CompositionError when ∂ₖ⁺a ≠ ∂ₖ⁻b.
Cell compose(const Cell& a, const Cell& b, int k);

/// cl{x} ↪ P for every x.
std::vector<Cell> generating_atoms(const OgPoset& p);

struct CellEnumeration {
  std::vector<Cell> cells;
  bool complete = true;
};

/// All cells of dimension ≤ max_dim. Complete when p is acyclic or a
/// strongly dw-acyclic regular directed complex; otherwise the subset cells
/// are extended by `bound` rounds of pairwise composition and the result is
/// flagged incomplete.
CellEnumeration enumerate_cells(const OgPoset& p, int max_dim, std::size_t bound = 2);

/// Rebuilds a cell as an iterated composite of generating atoms, following
/// its witness.
Cell factor_into_atoms(const OgPoset& p, const Cell& c);

}  // namespace rdc
