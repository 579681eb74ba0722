#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

/// Σx for every x, plus ⊥⁻ (index 0) and ⊥⁺ (index 1) in grade 0. Every Σx
/// with x of dimension 0 has input face ⊥⁻ and output face ⊥⁺.
OgPoset suspension(const OgPoset& p);
/// Flat index of Σx in the suspension.
inline std::size_t suspended(std::size_t x) { return x + 2; }

/// Gray product with the table of factor pairs. Elements of each dimension
/// are ordered lexicographically by (x, y) in flat order of the factors.
struct GrayProduct {
  OgPoset poset;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // flat -> (x, y)
  std::vector<std::size_t> index;                          // x * |Q| + y -> flat

  std::size_t at(std::size_t x, std::size_t y) const { return index[x * width + y]; }
  std::size_t width = 0;
};
GrayProduct gray_product(const OgPoset& p, const OgPoset& q);
OgPoset gray(const OgPoset& p, const OgPoset& q);

/// Join as diminish(augment P ⊗ augment Q). A missing side of a pair stands
/// for the added least element.
struct JoinProduct {
  OgPoset poset;
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> pairs;

  std::optional<std::size_t> find(std::optional<std::size_t> x, std::optional<std::size_t> y) const;
};
JoinProduct join_product(const OgPoset& p, const OgPoset& q);
OgPoset join(const OgPoset& p, const OgPoset& q);

/// Swaps input and output faces in the dimensions listed in j.
OgPoset dual(const OgPoset& p, const std::set<int>& j);
OgPoset total_dual(const OgPoset& p);

}  // namespace rdc
