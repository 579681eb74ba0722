#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rdc/graph.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

/// Sparse integer combination of the basis elements of one grade.
using Chain = std::map<std::uint32_t, std::int64_t>;

Chain& add_into(Chain& a, const Chain& b, std::int64_t factor = 1);
Chain positive_part(const Chain& c);
Chain negative_part(const Chain& c);  // as a non-negative chain
bool is_nonnegative(const Chain& c);

/// Augmented directed chain complex with a basis in every grade; the
/// direction is the span of the basis.
struct ChainComplex {
  std::vector<std::size_t> basis;           // size of each grade
  std::vector<std::vector<Chain>> boundary;  // boundary[n][i] in grade n - 1; empty for n = 0
  std::vector<std::int64_t> augmentation;   // on grade 0

  int dim() const { return static_cast<int>(basis.size()) - 1; }
  Chain apply_boundary(int n, const Chain& c) const;
  std::int64_t augment(const Chain& c) const;
  /// Rows indexed by grade n - 1, columns by grade n.
  std::vector<std::vector<std::int64_t>> matrix(int n) const;
};

/// Throws StructureError unless augment(p) is oriented thin.
ChainComplex linearize(const OgPoset& p);
bool boundary_squares_to_zero(const ChainComplex& c);
bool augmentation_kills_boundary(const ChainComplex& c);

/// Double sequence of chains; grades above dim() are zero.
struct GlobularTable {
  std::vector<std::array<Chain, 2>> rows;

  int dim() const { return static_cast<int>(rows.size()) - 1; }
  const Chain& at(int n, Sign s) const;
  void trim();
  friend bool operator==(const GlobularTable&, const GlobularTable&) = default;
  friend auto operator<=>(const GlobularTable& a, const GlobularTable& b) { return a.rows <=> b.rows; }
};

GlobularTable basis_table(const ChainComplex& c, ElemRef b);
bool is_unital_basis(const ChainComplex& c);
bool is_globular_table(const ChainComplex& c, const GlobularTable& x);

DirectedGraph adc_flow_graph(const ChainComplex& c, int k);
DirectedGraph adc_hasse(const ChainComplex& c);
bool is_steiner(const ChainComplex& c);
bool is_strong_steiner(const ChainComplex& c);

/// Sums of the top-dimensional elements of the boundaries of a molecule.
GlobularTable molecule_table(const OgPoset& p, const Subset& u);

GlobularTable nu_boundary(const GlobularTable& x, int n, Sign s);
/// Throws CompositionError unless ∂ₖ⁺x = ∂ₖ⁻y.
GlobularTable nu_compose(const GlobularTable& x, const GlobularTable& y, int k);

std::string to_string(const Chain& c, int grade);

/// Comparison of enumerated cells over p with the tables generated by the
/// basis tables under composition.
struct NuComparison {
  std::size_t cells = 0;
  std::size_t tables = 0;
  bool complete = true;          // cell enumeration was complete
  bool valid_tables = true;      // every cell maps to a globular table
  bool injective = true;
  bool surjective = true;        // every generated table is hit
  bool boundaries_commute = true;
  bool compositions_commute = true;
  std::vector<std::string> notes;  // first witnesses of failures

  bool isomorphic() const {
    return valid_tables && injective && surjective && boundaries_commute && compositions_commute;
  }
};
NuComparison compare_molec_nu(const OgPoset& p, int max_dim, std::size_t bound = 2);

}  // namespace rdc
