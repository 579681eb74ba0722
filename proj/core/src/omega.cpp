#include "rdc/omega.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "rdc/acyclicity.hpp"

namespace rdc {

bool Cell::injective() const {
  auto image = map.assignment;
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

std::string Cell::key() const {
  std::ostringstream os;
  const auto& s = shape.shape;
  for (int d = 0; d <= s.dim(); ++d) {
    std::vector<std::size_t> image;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (s.dim_of(x) == d) image.push_back(map(x));
    std::sort(image.begin(), image.end());
    os << '[';
    for (auto y : image) os << y << ',';
    os << ']';
  }
  return os.str();
}

namespace {

// Restriction of a cell to a closed subset of its shape.
Cell restrict_cell(Recognizer& rec, const Cell& c, const Subset& sub) {
  auto w = rec.recognize(sub);
  if (!w) throw StructureError("restriction of a cell is not a molecule");
  auto r = restrict_to(c.shape.shape, sub);
  std::vector<std::size_t> local(c.shape.size(), 0);
  for (std::size_t i = 0; i < r.to_ambient.size(); ++i) local[r.to_ambient[i]] = i;
  Cell out;
  out.shape.witness = transport(w, local, r.poset.size());
  out.shape.shape = std::move(r.poset);
  for (auto x : r.to_ambient) out.map.assignment.push_back(c.map(x));
  return out;
}

}  // namespace

Cell subset_cell(Recognizer& rec, const Subset& u) {
  const OgPoset& p = rec.ambient();
  auto w = rec.recognize(u);
  if (!w) throw StructureError("subset is not a molecule");
  auto r = restrict_to(p, u);
  std::vector<std::size_t> local(p.size(), 0);
  for (std::size_t i = 0; i < r.to_ambient.size(); ++i) local[r.to_ambient[i]] = i;
  Cell c;
  c.shape.witness = transport(w, local, r.poset.size());
  c.shape.shape = std::move(r.poset);
  c.map.assignment = std::move(r.to_ambient);
  return c;
}

Cell subset_cell(const OgPoset& p, const Subset& u) {
  Recognizer rec(p);
  return subset_cell(rec, u);
}

bool same_cell(const Cell& a, const Cell& b) {
  if (a.shape.size() != b.shape.size() || a.key() != b.key()) return false;
  // Molecules have at most one isomorphism, so the first one decides.
  auto phi = find_isomorphism(a.shape.shape, b.shape.shape);
  if (!phi) return false;
  for (std::size_t x = 0; x < a.shape.size(); ++x)
    if (b.map((*phi)(x)) != a.map(x)) return false;
  return true;
}

Cell cell_boundary(const Cell& c, int k, Sign s) {
  if (k >= c.dim()) return c;
  const auto& shape = c.shape.shape;
  Recognizer rec(shape);
  return restrict_cell(rec, c, boundary(shape, shape.full_subset(), k, s));
}

Cell compose(const Cell& a, const Cell& b, int k) {
  if (k < 0) throw RangeError("composition dimension must be non-negative");
  if (!same_cell(cell_boundary(a, k, Sign::Plus), cell_boundary(b, k, Sign::Minus)))
    throw CompositionError("cells are not composable at dimension " + std::to_string(k));
  if (a.dim() <= k) return b;
  if (b.dim() <= k) return a;
  auto pr = paste_with_maps(a.shape, b.shape, k);
  Cell c;
  std::vector<std::optional<std::size_t>> image(pr.molecule.size());
  auto put = [&](std::size_t r, std::size_t v) {
    if (image[r] && *image[r] != v) throw CompositionError("maps disagree on the shared boundary");
    image[r] = v;
  };
  for (std::size_t x = 0; x < a.shape.size(); ++x) put(pr.left_map[x], a.map(x));
  for (std::size_t y = 0; y < b.shape.size(); ++y) put(pr.right_map[y], b.map(y));
  c.shape = std::move(pr.molecule);
  for (auto& v : image) c.map.assignment.push_back(*v);
  return c;
}

std::vector<Cell> generating_atoms(const OgPoset& p) {
  Recognizer rec(p);
  std::vector<Cell> out;
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(subset_cell(rec, closure_of(p, x)));
  return out;
}

CellEnumeration enumerate_cells(const OgPoset& p, int max_dim, std::size_t bound) {
  CellEnumeration out;
  Recognizer rec(p);
  for (const auto& u : closed_subsets(p, max_dim).subsets)
    if (rec.recognize(u)) out.cells.push_back(subset_cell(rec, u));
  if (is_acyclic(p) || (is_strongly_dw_acyclic(p) && is_regular_directed_complex(p))) return out;

  out.complete = false;
  std::map<std::string, std::vector<std::size_t>> by_key;
  auto known = [&](const Cell& c) {
    auto it = by_key.find(c.key());
    if (it == by_key.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](auto i) { return same_cell(out.cells[i], c); });
  };
  for (std::size_t i = 0; i < out.cells.size(); ++i) by_key[out.cells[i].key()].push_back(i);

  for (std::size_t round = 0; round < bound; ++round) {
    const std::size_t n = out.cells.size();
    std::vector<std::vector<std::array<std::string, 2>>> keys(n);
    std::vector<std::vector<std::array<Cell, 2>>> bounds(n);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < out.cells[i].dim(); ++k) {
        bounds[i].push_back({cell_boundary(out.cells[i], k, Sign::Minus), cell_boundary(out.cells[i], k, Sign::Plus)});
        keys[i].push_back({bounds[i].back()[0].key(), bounds[i].back()[1].key()});
      }
    std::vector<Cell> fresh;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int top = std::min(out.cells[i].dim(), out.cells[j].dim());
        for (int k = 0; k < top; ++k) {
          const auto ku = static_cast<std::size_t>(k);
          if (keys[i][ku][1] != keys[j][ku][0] || !same_cell(bounds[i][ku][1], bounds[j][ku][0])) continue;
          auto c = compose(out.cells[i], out.cells[j], k);
          if (known(c) || std::any_of(fresh.begin(), fresh.end(), [&](const Cell& f) { return same_cell(f, c); }))
            continue;
          fresh.push_back(std::move(c));
        }
      }
    if (fresh.empty()) break;
    for (auto& c : fresh) {
      by_key[c.key()].push_back(out.cells.size());
      out.cells.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

Cell factor(const OgPoset& p, Recognizer& rec, const Cell& c, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Point:
      return subset_cell(rec, p.singleton(c.map(w.top)));
    case Witness::Kind::Atom:
      return subset_cell(rec, closure_of(p, c.map(w.top)));
    case Witness::Kind::Paste:
      return compose(factor(p, rec, c, *w.first), factor(p, rec, c, *w.second), w.k);
  }
  throw StructureError("unknown witness kind");
}

}  // namespace

Cell factor_into_atoms(const OgPoset& p, const Cell& c) {
  if (!c.shape.witness) throw StructureError("cell has no witness");
  Recognizer rec(p);
  return factor(p, rec, c, *c.shape.witness);
}

}  // namespace rdc
