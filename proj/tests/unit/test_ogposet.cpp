#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rdc/ogposet.hpp"

using namespace rdc;
using namespace rdc::fixtures;

namespace {

ElemRef R(std::uint32_t d, std::uint32_t i) { return {d, i}; }

// Fixed-point closure straight from the definition.
std::vector<ElemRef> naive_closure(const OgPoset& p, std::vector<ElemRef> todo) {
  std::vector<ElemRef> seen;
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
    seen.push_back(x);
    for (Sign s : kSigns)
      for (auto y : p.faces(x, s)) todo.push_back(y);
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

}  // namespace

TEST_CASE("construction validates face data") {
  CHECK(arrow().dim() == 1);
  CHECK(arrow().size() == 3);
  CHECK(OgPoset::empty().dim() == -1);
  CHECK_THROWS_AS(build(2, {{{{0}, {5}}}}), ReferenceError);
  CHECK_THROWS_AS(build(2, {{{{0}, {0}}}}), StructureError);
  CHECK_THROWS_AS(build(2, {{{{}, {}}}}), StructureError);
  CHECK_THROWS_AS(build(2, {{{{0, 0}, {1}}}}), StructureError);
  CHECK_THROWS_AS(OgPoset(OgPoset::Grades{{}, {ElementFaces{{0}, {1}}}}), StructureError);
}

TEST_CASE("faces of the whiskered triangle") {
  const auto p = whiskered_triangle();
  CHECK(p.faces(R(2, 0), Sign::Minus) == std::vector<ElemRef>{R(1, 0), R(1, 1)});
  CHECK(p.faces(R(2, 0), Sign::Plus) == std::vector<ElemRef>{R(1, 3)});
  CHECK(p.faces(R(0, 1), Sign::Minus).empty());
  CHECK(p.faces(R(0, 1), Sign::Plus).empty());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      for (Sign s : kSigns) {
        auto f = p.faces(p.ref(x), s);
        auto c = p.cofaces(p.ref(y), s);
        CHECK((std::find(f.begin(), f.end(), p.ref(y)) != f.end()) ==
              (std::find(c.begin(), c.end(), p.ref(x)) != c.end()));
      }
}

TEST_CASE("closure") {
  const auto p = whiskered_triangle();
  CHECK(closure(p, p.empty_subset()).none());
  const auto top = closure_of(p, p.flat(R(2, 0)));
  CHECK(top.count() == 7);
  CHECK(member_refs(p, top) == naive_closure(p, {R(2, 0)}));
  CHECK(!top.test(p.flat(R(1, 2))));
  CHECK(closure_of(two_path(), 1).count() == 1);
  for (std::size_t x = 0; x < p.size(); ++x)
    CHECK(member_refs(p, closure_of(p, x)) == naive_closure(p, {p.ref(x)}));
  CHECK(is_closed(p, top));
  CHECK(!is_closed(p, p.singleton(p.flat(R(1, 0)))));
}

TEST_CASE("maximal elements and dimension") {
  const auto p = whiskered_triangle();
  CHECK(member_refs(p, maximal(p, p.full_subset())) == std::vector<ElemRef>{R(1, 2), R(2, 0)});
  CHECK(dim_of(p, p.full_subset()) == 2);
  CHECK(dim_of(p, p.empty_subset()) == -1);
}

TEST_CASE("closed subsets of a path") {
  // Oracle: filter all 2^5 subsets by the closure condition.
  const auto p = two_path();
  std::size_t expected = 0;
  for (unsigned mask = 1; mask < 32; ++mask) {
    Subset u(p.size());
    for (std::size_t i = 0; i < 5; ++i)
      if (mask >> i & 1) u.set(i);
    if (is_closed(p, u)) ++expected;
  }
  const auto all = closed_subsets(p, 1);
  CHECK(all.complete);
  CHECK(all.subsets.size() == expected);
  CHECK(closed_subsets(p, 0).subsets.size() == 7);
  const auto cut = closed_subsets(p, 1, 3);
  CHECK(!cut.complete);
  CHECK(cut.subsets.size() == 3);
}

TEST_CASE("restriction") {
  const auto p = whiskered_triangle();
  const auto r = restrict_to(p, closure_of(p, p.flat(R(2, 0))));
  CHECK(r.poset.size() == 7);
  CHECK(r.poset.grade_size(1) == 3);
  CHECK(is_inclusion(r.poset, p, OgMap{r.to_ambient}));
  CHECK_THROWS_AS(restrict_to(p, p.singleton(p.flat(R(1, 0)))), StructureError);
}

TEST_CASE("morphisms") {
  const auto p = whiskered_triangle();
  CHECK(is_inclusion(p, p, OgMap::identity(p)));

  const auto disc = two_triangle_disc();
  const auto pinched = pinched_disc();
  OgMap q = OgMap::identity(disc);
  q.assignment[disc.flat(R(0, 3))] = pinched.flat(R(0, 2));
  for (std::size_t x = disc.flat(R(1, 0)); x < disc.size(); ++x) q.assignment[x] = x - 1;
  const auto rep = validate_morphism(disc, pinched, q);
  CHECK(rep.valid);
  CHECK(!rep.injective);
  CHECK(!is_inclusion(disc, pinched, q));

  const auto a = arrow();
  const auto pt = OgPoset::point();
  const auto collapse = validate_morphism(a, pt, OgMap{{0, 0, 0}});
  CHECK(!collapse.valid);
  CHECK(collapse.witness == R(1, 0));

  OgMap swap{{1, 0, 2}};
  const auto bad = validate_morphism(a, a, swap);
  CHECK(!bad.valid);
  CHECK(bad.sign.has_value());
}

TEST_CASE("augmentation") {
  const auto ap = augment(OgPoset::point());
  CHECK(ap.size() == 2);
  CHECK(ap.grade_size(0) == 1);
  CHECK(ap.faces(R(1, 0), Sign::Plus) == std::vector<ElemRef>{R(0, 0)});
  CHECK(ap.faces(R(1, 0), Sign::Minus).empty());
  CHECK(has_positive_least_element(ap));
  CHECK(diminish(augment(arrow())) == arrow());
  CHECK(augment(two_path()).grade_size(0) == 1);
  CHECK_THROWS_AS(diminish(arrow()), StructureError);
}

TEST_CASE("oriented thinness") {
  CHECK(is_oriented_thin(augment(whiskered_triangle())));
  CHECK(is_oriented_thin(augment(non_acyclic_atom())));
  CHECK(!is_oriented_thin(arrow()));
  // Three 1-cells into one 2-cell between the same two vertices.
  const auto three = build(2, {{{{0}, {1}}, {{0}, {1}}, {{0}, {1}}}, {{{0, 1}, {2}}}});
  CHECK(!is_oriented_thin(augment(three)));
}
