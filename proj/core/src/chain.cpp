#include "rdc/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rdc/molecule.hpp"
#include "rdc/omega.hpp"

namespace rdc {

Chain& add_into(Chain& a, const Chain& b, std::int64_t factor) {
  for (auto [k, v] : b) {
    auto& slot = a[k];
    slot += factor * v;
    if (slot == 0) a.erase(k);
  }
  return a;
}

Chain positive_part(const Chain& c) {
  Chain out;
  for (auto [k, v] : c)
    if (v > 0) out[k] = v;
  return out;
}

Chain negative_part(const Chain& c) {
  Chain out;
  for (auto [k, v] : c)
    if (v < 0) out[k] = -v;
  return out;
}

bool is_nonnegative(const Chain& c) {
  return std::all_of(c.begin(), c.end(), [](const auto& kv) { return kv.second >= 0; });
}

Chain ChainComplex::apply_boundary(int n, const Chain& c) const {
  Chain out;
  if (n <= 0) return out;
  for (auto [i, v] : c) add_into(out, boundary[static_cast<std::size_t>(n)][i], v);
  return out;
}

std::int64_t ChainComplex::augment(const Chain& c) const {
  std::int64_t s = 0;
  for (auto [i, v] : c) s += v * augmentation[i];
  return s;
}

std::vector<std::vector<std::int64_t>> ChainComplex::matrix(int n) const {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::int64_t>> m(basis[un - 1], std::vector<std::int64_t>(basis[un], 0));
  for (std::size_t j = 0; j < basis[un]; ++j)
    for (auto [i, v] : boundary[un][j]) m[i][j] = v;
  return m;
}

ChainComplex linearize(const OgPoset& p) {
  if (!is_oriented_thin(augment(p))) throw StructureError("augmented poset is not oriented thin");
  ChainComplex c;
  c.boundary.resize(p.grades().size());
  for (std::size_t n = 0; n < p.grades().size(); ++n) {
    c.basis.push_back(p.grades()[n].size());
    if (n == 0) continue;
    for (const auto& e : p.grades()[n]) {
      Chain d;
      for (auto f : e.out) d[f] += 1;
      for (auto f : e.in) d[f] -= 1;
      c.boundary[n].push_back(std::move(d));
    }
  }
  c.augmentation.assign(p.grade_size(0), 1);
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int n = 2; n <= c.dim(); ++n)
    for (const auto& b : c.boundary[static_cast<std::size_t>(n)])
      if (!c.apply_boundary(n - 1, b).empty()) return false;
  return true;
}

bool augmentation_kills_boundary(const ChainComplex& c) {
  if (c.dim() < 1) return true;
  for (const auto& b : c.boundary[1])
    if (c.augment(b) != 0) return false;
  return true;
}

const Chain& GlobularTable::at(int n, Sign s) const {
  static const Chain zero;
  if (n < 0 || n > dim()) return zero;
  return rows[static_cast<std::size_t>(n)][idx(s)];
}

void GlobularTable::trim() {
  while (!rows.empty() && rows.back()[0].empty() && rows.back()[1].empty()) rows.pop_back();
}

GlobularTable basis_table(const ChainComplex& c, ElemRef b) {
  GlobularTable t;
  t.rows.resize(b.dim + 1);
  for (Sign s : kSigns) t.rows[b.dim][idx(s)] = Chain{{b.index, 1}};
  for (int m = static_cast<int>(b.dim) - 1; m >= 0; --m) {
    const auto um = static_cast<std::size_t>(m);
    t.rows[um][0] = negative_part(c.apply_boundary(m + 1, t.rows[um + 1][0]));
    t.rows[um][1] = positive_part(c.apply_boundary(m + 1, t.rows[um + 1][1]));
  }
  return t;
}

namespace {

std::vector<ElemRef> basis_refs(const ChainComplex& c) {
  std::vector<ElemRef> out;
  for (std::size_t n = 0; n < c.basis.size(); ++n)
    for (std::size_t i = 0; i < c.basis[n]; ++i)
      out.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)});
  return out;
}

}  // namespace

bool is_unital_basis(const ChainComplex& c) {
  for (auto b : basis_refs(c)) {
    const auto t = basis_table(c, b);
    for (Sign s : kSigns)
      if (c.augment(t.at(0, s)) != 1) return false;
  }
  return true;
}

bool is_globular_table(const ChainComplex& c, const GlobularTable& x) {
  if (x.dim() < 0 || x.dim() > c.dim()) return false;
  for (const auto& row : x.rows)
    for (const auto& ch : row)
      if (!is_nonnegative(ch)) return false;
  for (int n = 1; n <= x.dim() + 1; ++n) {
    Chain want = x.at(n - 1, Sign::Plus);
    add_into(want, x.at(n - 1, Sign::Minus), -1);
    for (Sign s : kSigns)
      if (c.apply_boundary(n, x.at(n, s)) != want) return false;
  }
  for (Sign s : kSigns)
    if (c.augment(x.at(0, s)) != 1) return false;
  return true;
}

DirectedGraph adc_flow_graph(const ChainComplex& c, int k) {
  std::vector<ElemRef> verts;
  for (auto b : basis_refs(c))
    if (static_cast<int>(b.dim) > k) verts.push_back(b);
  DirectedGraph g(verts);
  if (k < 0) return g;
  std::vector<GlobularTable> tables;
  for (auto b : verts) tables.push_back(basis_table(c, b));
  auto meets = [](const Chain& a, const Chain& b) {
    return std::any_of(a.begin(), a.end(), [&](const auto& kv) { return b.count(kv.first) > 0; });
  };
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (meets(tables[i].at(k, Sign::Plus), tables[j].at(k, Sign::Minus))) g.add_edge(i, j);
  return g;
}

DirectedGraph adc_hasse(const ChainComplex& c) {
  DirectedGraph g(basis_refs(c));
  for (std::size_t n = 1; n < c.basis.size(); ++n)
    for (std::size_t i = 0; i < c.basis[n]; ++i) {
      const ElemRef top{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)};
      for (auto [j, v] : c.boundary[n][i]) {
        const ElemRef face{static_cast<std::uint32_t>(n - 1), j};
        if (v < 0) g.add_edge(face, top);
        if (v > 0) g.add_edge(top, face);
      }
    }
  return g;
}

bool is_steiner(const ChainComplex& c) {
  if (!is_unital_basis(c)) return false;
  for (int k = 0; k < c.dim(); ++k)
    if (!is_acyclic(adc_flow_graph(c, k))) return false;
  return true;
}

bool is_strong_steiner(const ChainComplex& c) { return is_unital_basis(c) && is_acyclic(adc_hasse(c)); }

namespace {

GlobularTable table_of(const OgPoset& shape, const std::function<ElemRef(std::size_t)>& image) {
  GlobularTable t;
  const Subset all = shape.full_subset();
  t.rows.resize(static_cast<std::size_t>(shape.dim() + 1));
  for (int n = 0; n <= shape.dim(); ++n)
    for (Sign s : kSigns) {
      const Subset faces = boundary_faces(shape, all, n, s);
      auto& row = t.rows[static_cast<std::size_t>(n)][idx(s)];
      for (auto y = faces.find_first(); y != Subset::npos; y = faces.find_next(y)) row[image(y).index] += 1;
    }
  return t;
}

GlobularTable cell_table(const OgPoset& p, const Cell& c) {
  return table_of(c.shape.shape, [&](std::size_t y) { return p.ref(c.map(y)); });
}

}  // namespace

GlobularTable molecule_table(const OgPoset& p, const Subset& u) {
  auto r = restrict_to(p, u);
  return table_of(r.poset, [&](std::size_t y) { return p.ref(r.to_ambient[y]); });
}

GlobularTable nu_boundary(const GlobularTable& x, int n, Sign s) {
  if (n < 0) throw RangeError("boundary dimension must be non-negative");
  GlobularTable out;
  out.rows.resize(static_cast<std::size_t>(n + 1));
  for (int m = 0; m < n; ++m)
    for (Sign b : kSigns) out.rows[static_cast<std::size_t>(m)][idx(b)] = x.at(m, b);
  for (Sign b : kSigns) out.rows[static_cast<std::size_t>(n)][idx(b)] = x.at(n, s);
  out.trim();
  return out;
}

GlobularTable nu_compose(const GlobularTable& x, const GlobularTable& y, int k) {
  const auto bx = nu_boundary(x, k, Sign::Plus);
  if (bx != nu_boundary(y, k, Sign::Minus)) throw CompositionError("tables are not composable");
  GlobularTable out;
  out.rows.resize(static_cast<std::size_t>(std::max(x.dim(), y.dim()) + 1));
  for (int n = 0; n <= out.dim(); ++n)
    for (Sign s : kSigns) {
      Chain c = x.at(n, s);
      add_into(c, bx.at(n, s), -1);
      add_into(c, y.at(n, s));
      out.rows[static_cast<std::size_t>(n)][idx(s)] = std::move(c);
    }
  out.trim();
  return out;
}

std::string to_string(const Chain& c, int grade) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [i, v] : c) {
    if (v < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    const auto a = v < 0 ? -v : v;
    if (a != 1) os << a;
    os << "(" << grade << "," << i << ")";
    first = false;
  }
  return os.str();
}

NuComparison compare_molec_nu(const OgPoset& p, int max_dim, std::size_t bound) {
  NuComparison r;
  const auto cx = linearize(p);
  const auto cells = enumerate_cells(p, max_dim, bound);
  r.complete = cells.complete;
  r.cells = cells.cells.size();

  std::vector<GlobularTable> tables;
  std::map<GlobularTable, std::size_t> owner;
  for (std::size_t i = 0; i < cells.cells.size(); ++i) {
    tables.push_back(cell_table(p, cells.cells[i]));
    if (!is_globular_table(cx, tables.back()) && r.valid_tables) {
      r.valid_tables = false;
      r.notes.push_back("cell " + std::to_string(i) + " does not give a globular table");
    }
    auto [it, fresh] = owner.emplace(tables.back(), i);
    if (!fresh && r.injective) {
      r.injective = false;
      r.notes.push_back("cells " + std::to_string(it->second) + " and " + std::to_string(i) + " have the same table");
    }
  }

  std::vector<std::vector<std::array<Cell, 2>>> bounds(cells.cells.size());
  for (std::size_t i = 0; i < cells.cells.size(); ++i) {
    const auto& c = cells.cells[i];
    for (int n = 0; n < c.dim(); ++n) {
      bounds[i].push_back({cell_boundary(c, n, Sign::Minus), cell_boundary(c, n, Sign::Plus)});
      for (Sign s : kSigns)
        if (cell_table(p, bounds[i].back()[idx(s)]) != nu_boundary(tables[i], n, s) && r.boundaries_commute) {
          r.boundaries_commute = false;
          r.notes.push_back("boundary of cell " + std::to_string(i) + " at " + std::to_string(n));
        }
    }
  }

  for (std::size_t i = 0; i < cells.cells.size(); ++i)
    for (std::size_t j = 0; j < cells.cells.size(); ++j) {
      const int top = std::min(cells.cells[i].dim(), cells.cells[j].dim());
      for (int k = 0; k < top; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        if (!same_cell(bounds[i][uk][1], bounds[j][uk][0])) continue;
        const auto c = compose(cells.cells[i], cells.cells[j], k);
        if (cell_table(p, c) != nu_compose(tables[i], tables[j], k) && r.compositions_commute) {
          r.compositions_commute = false;
          r.notes.push_back("composite of cells " + std::to_string(i) + " and " + std::to_string(j));
        }
      }
    }

  // Tables generated by the basis tables under composition.
  std::set<GlobularTable> generated;
  for (std::size_t n = 0; n < cx.basis.size() && static_cast<int>(n) <= max_dim; ++n)
    for (std::size_t i = 0; i < cx.basis[n]; ++i)
      generated.insert(basis_table(cx, {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)}));
  const std::size_t rounds = cells.complete ? 16 : bound;
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<GlobularTable> current(generated.begin(), generated.end());
    std::set<GlobularTable> fresh;
    for (const auto& x : current)
      for (const auto& y : current)
        for (int k = 0; k < std::min(x.dim(), y.dim()); ++k) {
          if (nu_boundary(x, k, Sign::Plus) != nu_boundary(y, k, Sign::Minus)) continue;
          auto z = nu_compose(x, y, k);
          if (!generated.count(z)) fresh.insert(std::move(z));
        }
    if (fresh.empty()) break;
    generated.insert(fresh.begin(), fresh.end());
  }
  r.tables = generated.size();
  for (const auto& t : generated)
    if (!owner.count(t)) {
      r.surjective = false;
      r.notes.push_back("a generated table of dimension " + std::to_string(t.dim()) + " has no cell");
      break;
    }
  return r;
}

}  // namespace rdc
