#include <doctest.h>

#include "fixtures.hpp"
#include "rdc/acyclicity.hpp"
#include "rdc/chain.hpp"
#include "rdc/flow.hpp"
#include "rdc/omega.hpp"

using namespace rdc;
using namespace rdc::fixtures;

namespace {

ElemRef R(std::uint32_t d, std::uint32_t i) { return {d, i}; }

// Sum of the d-dimensional members of a subset as a chain.
Chain sum_of(const OgPoset& p, const Subset& u) {
  Chain c;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) c[p.ref(x).index] += 1;
  return c;
}

const auto kRdcs = {arrow(), two_path(), loop_graph(), whiskered_triangle(), two_cells_in_line(), three_cells(),
                    non_dw_acyclic_atom(), non_acyclic_atom(), dw_acyclic_not_gray_stable_atom(), pinched_disc()};

}  // namespace

TEST_CASE("linearisation") {
  const auto a = linearize(arrow());
  CHECK(a.basis == std::vector<std::size_t>{2, 1});
  CHECK(a.boundary[1][0] == Chain{{0, -1}, {1, 1}});
  CHECK(a.augmentation == std::vector<std::int64_t>{1, 1});
  CHECK(a.matrix(1) == std::vector<std::vector<std::int64_t>>{{-1}, {1}});

  const auto t = linearize(whiskered_triangle());
  CHECK(t.boundary[2][0] == Chain{{0, -1}, {1, -1}, {3, 1}});

  for (const auto& p : kRdcs) {
    const auto c = linearize(p);
    CHECK(boundary_squares_to_zero(c));
    CHECK(augmentation_kills_boundary(c));
    CHECK(is_unital_basis(c));
  }
  CHECK_THROWS_AS(linearize(build(2, {{{{0}, {1}}, {{0}, {1}}, {{0}, {1}}}, {{{0, 1}, {2}}}})), StructureError);
}

TEST_CASE("basis tables are sums of faces") {
  const auto p = whiskered_triangle();
  const auto c = linearize(p);
  const auto x = basis_table(c, R(2, 0));
  CHECK(x.at(1, Sign::Minus) == Chain{{0, 1}, {1, 1}});
  CHECK(x.at(1, Sign::Plus) == Chain{{3, 1}});
  CHECK(x.at(0, Sign::Minus) == Chain{{0, 1}});
  CHECK(x.at(0, Sign::Plus) == Chain{{2, 1}});
  CHECK(x.at(2, Sign::Plus) == Chain{{0, 1}});
  CHECK(x.at(3, Sign::Plus).empty());

  for (const auto& q : kRdcs) {
    const auto cq = linearize(q);
    for (std::size_t y = 0; y < q.size(); ++y) {
      const auto t = basis_table(cq, q.ref(y));
      const auto cl = closure_of(q, y);
      for (int n = 0; n <= q.dim_of(y); ++n)
        for (Sign s : kSigns) CHECK(t.at(n, s) == sum_of(q, boundary_faces(q, cl, n, s)));
      CHECK(molecule_table(q, cl) == t);
      CHECK(is_globular_table(cq, t));
    }
  }
}

TEST_CASE("chain complex graphs match the poset graphs") {
  for (const auto& p : kRdcs) {
    const auto c = linearize(p);
    const auto id = [](ElemRef r) { return r; };
    CHECK(is_isomorphism(adc_hasse(c), oriented_hasse(p), id));
    for (int k = -1; k <= p.dim(); ++k) CHECK(is_isomorphism(adc_flow_graph(c, k), flow_graph(p, k), id));
    if (is_dw_acyclic(p)) CHECK(is_steiner(c));
    if (is_acyclic(p)) CHECK(is_strong_steiner(c));
  }
  CHECK(!is_steiner(linearize(non_dw_acyclic_atom())));
  CHECK(is_steiner(linearize(non_acyclic_atom())));
  CHECK(!is_strong_steiner(linearize(non_acyclic_atom())));
  CHECK(is_strong_steiner(linearize(whiskered_triangle())));
}

TEST_CASE("molecule tables") {
  const auto p = two_cells_in_line();
  const auto t = molecule_table(p, p.full_subset());
  for (Sign s : kSigns) CHECK(t.at(2, s) == Chain{{0, 1}, {1, 1}});

  // ∂ of the top-dimensional sum is the difference of the boundary sums.
  for (const auto& q : {whiskered_triangle(), two_cells_in_line(), three_cells(), non_acyclic_atom()}) {
    const auto c = linearize(q);
    for (const auto& cell : enumerate_cells(q, q.dim()).cells) {
      const int n = cell.dim();
      if (n == 0) continue;
      Subset u = q.empty_subset();
      for (auto y : cell.map.assignment) u.set(y);
      const auto top = grade_of(q, u, n);
      Chain want = sum_of(q, boundary_faces(q, u, n - 1, Sign::Plus));
      add_into(want, sum_of(q, boundary_faces(q, u, n - 1, Sign::Minus)), -1);
      CHECK(c.apply_boundary(n, sum_of(q, top)) == want);
    }
  }
}

TEST_CASE("globular tables of the loop graph") {
  // f = (1,0): a → b, g = (1,1) and h = (1,2): b → a.
  const auto c = linearize(loop_graph());
  const auto f = basis_table(c, R(1, 0));
  const auto g = basis_table(c, R(1, 1));
  const auto h = basis_table(c, R(1, 2));
  const auto x = nu_compose(f, g, 0);
  const auto y = nu_compose(f, h, 0);
  for (Sign s : kSigns) {
    CHECK(x.at(1, s) == Chain{{0, 1}, {1, 1}});
    CHECK(y.at(1, s) == Chain{{0, 1}, {2, 1}});
  }
  const auto xy = nu_compose(x, y, 0);
  const auto yx = nu_compose(y, x, 0);
  CHECK(xy == yx);
  for (Sign s : kSigns) CHECK(xy.at(1, s) == Chain{{0, 2}, {1, 1}, {2, 1}});
  CHECK(is_globular_table(c, xy));
  CHECK_THROWS_AS(nu_compose(f, f, 0), CompositionError);
  for (int n = 1; n < 4; ++n)
    for (Sign s : kSigns) CHECK(nu_boundary(f, n, s) == f);
  CHECK(to_string(xy.at(1, Sign::Plus), 1) == "2(1,0) + (1,1) + (1,2)");
}

TEST_CASE("cells against tables") {
  const auto a = compare_molec_nu(arrow(), 1);
  CHECK(a.cells == 3);
  CHECK(a.tables == 3);
  CHECK(a.isomorphic());

  const auto t = compare_molec_nu(whiskered_triangle(), 2);
  CHECK(t.complete);
  CHECK(t.isomorphic());
  CHECK(t.cells == t.tables);

  const auto l = compare_molec_nu(loop_graph(), 1);
  CHECK(!l.complete);
  CHECK(!l.injective);
  CHECK(!l.isomorphic());
}
