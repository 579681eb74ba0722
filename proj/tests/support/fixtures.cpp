#include "fixtures.hpp"

namespace rdc::fixtures {

OgPoset build(std::size_t points, const std::vector<std::vector<Faces>>& higher, std::string name) {
  OgPoset::Grades grades;
  grades.emplace_back(points);
  for (const auto& grade : higher) {
    auto& g = grades.emplace_back();
    for (const auto& [in, out] : grade) g.push_back(ElementFaces{in, out});
  }
  return OgPoset(std::move(grades), std::move(name));
}

OgPoset arrow() { return build(2, {{{{0}, {1}}}}, "arrow"); }

OgPoset two_path() { return build(3, {{{{0}, {1}}, {{1}, {2}}}}, "two_path"); }

OgPoset cospan() { return build(3, {{{{1}, {0}}, {{1}, {2}}}}, "cospan"); }

OgPoset loop_graph() {
  // a = 0, b = 1; f: a → b, g: b → a, h: b → a.
  return build(2, {{{{0}, {1}}, {{1}, {0}}, {{1}, {0}}}}, "loop_graph");
}

OgPoset whiskered_triangle() {
  return build(4,
               {
                   {{{0}, {1}}, {{1}, {2}}, {{2}, {3}}, {{0}, {2}}},
                   {{{0, 1}, {3}}},
               },
               "whiskered_triangle");
}

OgPoset two_cells_in_line() {
  return build(4,
               {
                   {{{0}, {1}}, {{1}, {2}}, {{2}, {3}}, {{0}, {1}}, {{2}, {3}}},
                   {{{0}, {3}}, {{2}, {4}}},
               },
               "two_cells_in_line");
}

OgPoset three_cells() {
  // A = 0, B = 1, C = 2, D = 3, E = 4.
  return build(5,
               {
                   {{{0}, {2}}, {{2}, {3}}, {{3}, {4}}, {{0}, {1}}, {{1}, {2}}, {{1}, {3}}, {{3}, {4}}},
                   {{{0}, {3, 4}}, {{4, 1}, {5}}, {{2}, {6}}},
               },
               "three_cells");
}

OgPoset two_triangle_disc() {
  // 0 left, 1 right, 2 lower apex, 3 upper apex.
  return build(4,
               {
                   {{{0}, {2}}, {{2}, {1}}, {{0}, {1}}, {{0}, {3}}, {{3}, {1}}},
                   {{{0, 1}, {2}}, {{2}, {3, 4}}},
               },
               "two_triangle_disc");
}

OgPoset pinched_disc() {
  return build(3,
               {
                   {{{0}, {2}}, {{2}, {1}}, {{0}, {1}}, {{0}, {2}}, {{2}, {1}}},
                   {{{0, 1}, {2}}, {{2}, {3, 4}}},
               },
               "pinched_disc");
}

OgPoset non_dw_acyclic_atom() {
  return build(4,
               {
                   {{{0}, {1}}, {{1}, {2}}, {{1}, {3}}, {{0}, {3}}, {{3}, {2}}, {{3}, {1}}},
                   {{{0, 2}, {3}}, {{1}, {2, 4}}, {{0}, {3, 5}}, {{5, 1}, {4}}},
                   {{{0, 1}, {2, 3}}},
               },
               "non_dw_acyclic");
}

OgPoset non_acyclic_atom() {
  return build(4,
               {
                   {{{0}, {1}}, {{1}, {2}}, {{0}, {3}}, {{3}, {2}}, {{3}, {1}}},
                   {{{0, 1}, {2, 3}}, {{0}, {2, 4}}, {{4, 1}, {3}}},
                   {{{0}, {1, 2}}},
               },
               "non_acyclic");
}

OgPoset dw_acyclic_not_gray_stable_atom() {
  return build(3,
               {
                   {{{0}, {1}}, {{1}, {2}}, {{1}, {2}}, {{0}, {2}}, {{0}, {1}}},
                   {{{0, 2}, {3}}, {{1}, {2}}, {{0}, {4}}, {{4, 1}, {3}}},
                   {{{0, 1}, {2, 3}}},
               },
               "dw_acyclic_not_gray_stable");
}

}  // namespace rdc::fixtures
