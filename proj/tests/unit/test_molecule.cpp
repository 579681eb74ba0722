#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rdc/flow.hpp"
#include "rdc/molecule.hpp"

using namespace rdc;
using namespace rdc::fixtures;

namespace {

ElemRef R(std::uint32_t d, std::uint32_t i) { return {d, i}; }

Molecule mol(const OgPoset& p) {
  auto m = is_molecule(p);
  REQUIRE(m.has_value());
  return *m;
}

Molecule sub_molecule(const OgPoset& p, const Subset& u) { return mol(restrict_to(p, u).poset); }

bool isomorphic(const OgPoset& a, const OgPoset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace

TEST_CASE("point") {
  const auto pt = point();
  CHECK(pt.size() == 1);
  CHECK(pt.dim() == 0);
  CHECK(boundary(pt.shape, pt.shape.full_subset(), 0, Sign::Minus) == pt.shape.full_subset());
  CHECK(is_round(pt.shape));
  CHECK(pt.witness->kind == Witness::Kind::Point);
}

TEST_CASE("boundaries") {
  const auto p = whiskered_triangle();
  const auto all = p.full_subset();
  const auto in = boundary(p, all, 1, Sign::Minus);
  CHECK(member_refs(p, in) ==
        std::vector<ElemRef>{R(0, 0), R(0, 1), R(0, 2), R(0, 3), R(1, 0), R(1, 1), R(1, 2)});
  CHECK(member_refs(p, boundary(p, all, 1, Sign::Plus)) ==
        std::vector<ElemRef>{R(0, 0), R(0, 2), R(0, 3), R(1, 2), R(1, 3)});
  for (int n = 2; n < 5; ++n)
    for (Sign s : kSigns) CHECK(boundary(p, all, n, s) == all);
  CHECK(boundary(p, all, -1, Sign::Plus).none());

  const auto q = two_path();
  CHECK(member_refs(q, boundary(q, q.full_subset(), 0, Sign::Plus)) == std::vector<ElemRef>{R(0, 2)});
  CHECK(member_refs(q, boundary(q, q.full_subset(), 0, Sign::Minus)) == std::vector<ElemRef>{R(0, 0)});
  CHECK(member_refs(q, interior(q, q.full_subset())) == std::vector<ElemRef>{R(0, 1), R(1, 0), R(1, 1)});
}

TEST_CASE("globularity and roundness") {
  CHECK(is_globular(whiskered_triangle()));
  CHECK(!is_round(whiskered_triangle()));
  CHECK(is_globular(two_cells_in_line()));
  CHECK(!is_round(two_cells_in_line()));
  CHECK(is_round(two_path()));
  for (const auto& p : {non_dw_acyclic_atom(), non_acyclic_atom(), three_cells()})
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(is_round(p, closure_of(p, x)));
}

TEST_CASE("pasting") {
  const auto a = atom(point(), point());
  CHECK(isomorphic(a.shape, arrow()));
  const auto path = paste(a, a, 0);
  CHECK(path.size() == 5);
  CHECK(isomorphic(path.shape, two_path()));
  CHECK(path.witness->kind == Witness::Kind::Paste);
  CHECK_THROWS_AS(paste(a, a, 1), RangeError);
  CHECK_THROWS_AS(paste(a, a, -1), RangeError);
  const auto globe = atom(a, a);
  const auto lens = atom(path, path);
  CHECK_THROWS_AS(paste(globe, lens, 1), CompositionError);
}

TEST_CASE("layers paste back to the molecule") {
  const auto p = two_cells_in_line();
  Recognizer rec(p);
  for (int k : {0, 1}) {
    for (const auto& l : layerings(rec, p.full_subset(), k)) {
      auto acc = sub_molecule(p, l.layers.front());
      for (std::size_t i = 1; i < l.layers.size(); ++i) acc = paste(acc, sub_molecule(p, l.layers[i]), k);
      CHECK(isomorphic(acc.shape, p));
    }
  }
}

TEST_CASE("atoms") {
  const auto a = atom(point(), point());
  const auto globe = atom(a, a);
  CHECK(globe.shape.grade_size(0) == 2);
  CHECK(globe.shape.grade_size(1) == 2);
  CHECK(globe.shape.grade_size(2) == 1);
  CHECK(globe.witness->kind == Witness::Kind::Atom);

  const auto u = non_dw_acyclic_atom();
  const auto all = u.full_subset();
  const auto in = sub_molecule(u, boundary(u, all, 2, Sign::Minus));
  const auto out = sub_molecule(u, boundary(u, all, 2, Sign::Plus));
  const auto built = atom(in, out);
  CHECK(built.dim() == 3);
  CHECK(maximal(built.shape, built.shape.full_subset()).count() == 1);
  CHECK(isomorphic(built.shape, u));

  CHECK_THROWS_AS(atom(a, globe), CompositionError);
  const auto line = mol(two_cells_in_line());
  CHECK_THROWS_AS(atom(line, line), CompositionError);
}

TEST_CASE("recognition") {
  CHECK(!is_molecule(cospan()));
  CHECK(!is_molecule(loop_graph()));
  CHECK(is_regular_directed_complex(loop_graph()));
  CHECK(is_regular_directed_complex(whiskered_triangle()));
  CHECK(!is_regular_directed_complex(build(3, {{{{0, 1}, {}}}})));
  CHECK(is_atom(non_acyclic_atom()));
  CHECK(!is_atom(two_path()));

  const auto p = whiskered_triangle();
  const auto m = mol(p);
  CHECK(m.witness->kind == Witness::Kind::Paste);
  CHECK(m.witness->k == 0);
  const auto rebuilt = rebuild(p, *m.witness);
  CHECK(unique_molecule_iso(rebuilt, m, true).has_value());

  for (const auto& q : {two_cells_in_line(), three_cells(), non_dw_acyclic_atom(), non_acyclic_atom(),
                        dw_acyclic_not_gray_stable_atom(), two_triangle_disc()}) {
    const auto mq = mol(q);
    CHECK(isomorphic(rebuild(q, *mq.witness).shape, q));
    CHECK(is_globular(q));
  }
  CHECK(is_regular_directed_complex(pinched_disc()));
  CHECK(!is_molecule(pinched_disc()));
}

TEST_CASE("molecule isomorphisms") {
  const auto pt = point();
  auto id = unique_molecule_iso(pt, pt, true);
  REQUIRE(id);
  CHECK(id->assignment == std::vector<std::size_t>{0});
  CHECK(!unique_molecule_iso(mol(arrow()), pt));

  // The same shape with the 1-cells listed in reverse order.
  const auto a = whiskered_triangle();
  const auto b = build(4, {{{{0}, {2}}, {{2}, {3}}, {{1}, {2}}, {{0}, {1}}}, {{{3, 2}, {0}}}});
  auto phi = unique_molecule_iso(mol(a), mol(b), true);
  REQUIRE(phi);
  for (std::uint32_t i = 0; i < 4; ++i) {
    CHECK((*phi)(a.flat(R(0, i))) == b.flat(R(0, i)));
    CHECK((*phi)(a.flat(R(1, i))) == b.flat(R(1, 3 - i)));
  }
  CHECK(find_isomorphisms(loop_graph(), loop_graph(), 10).size() == 2);
}

TEST_CASE("submolecules") {
  CHECK(submolecules(point()).size() == 1);
  const auto a = mol(arrow());
  CHECK(submolecules(a).size() == 3);

  const auto p = two_cells_in_line();
  const auto subs = submolecules(mol(p));
  auto has = [&](std::initializer_list<ElemRef> gens) {
    std::vector<ElemRef> v(gens);
    return std::find(subs.begin(), subs.end(), closure_of(p, v)) != subs.end();
  };
  CHECK(has({R(2, 0), R(1, 1)}));
  CHECK(has({R(1, 1), R(2, 1)}));
  CHECK(has({R(2, 0)}));
  CHECK(has({R(2, 1)}));
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(has({R(1, i)}));
  CHECK(!has({R(2, 0), R(2, 1)}));
  CHECK(has({R(2, 0), R(1, 1), R(2, 1)}));
  Recognizer rec(p);
  for (const auto& s : subs) {
    CHECK(is_closed(p, s));
    CHECK(rec.recognize(s) != nullptr);
  }
}
