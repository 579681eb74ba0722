#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc::fixtures {

/// Faces of one element: (inputs, outputs) as indices one grade down.
using Faces = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

/// `points` 0-cells followed by the listed higher grades.
OgPoset build(std::size_t points, const std::vector<std::vector<Faces>>& higher, std::string name = {});

OgPoset arrow();
OgPoset two_path();
OgPoset cospan();
OgPoset loop_graph();

/// Three arrows 0→1→2→3 with a 2-cell from the first two to a chord 0→2.
OgPoset whiskered_triangle();
/// Two 2-cells joined by a 1-cell, the first layering example.
OgPoset two_cells_in_line();
/// Three 2-cells on five vertices, the flow graph example.
OgPoset three_cells();

/// Two triangles glued along a middle edge, and its quotient identifying the
/// two apex vertices (vertex 3 of the disc becomes vertex 2).
OgPoset two_triangle_disc();
OgPoset pinched_disc();

/// The 3-atoms of the acyclicity examples.
OgPoset non_dw_acyclic_atom();
OgPoset non_acyclic_atom();
OgPoset dw_acyclic_not_gray_stable_atom();

}  // namespace rdc::fixtures
