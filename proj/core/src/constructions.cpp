#include "rdc/constructions.hpp"

#include <algorithm>

namespace rdc {

OgPoset suspension(const OgPoset& p) {
  OgPoset::Grades grades;
  grades.push_back({ElementFaces{}, ElementFaces{}});
  for (std::size_t d = 0; d < p.grades().size(); ++d) {
    auto g = p.grades()[d];
    if (d == 0)
      for (auto& e : g) e = ElementFaces{{0}, {1}};
    grades.push_back(std::move(g));
  }
  return OgPoset(std::move(grades), p.name().empty() ? "" : "S" + p.name());
}

GrayProduct gray_product(const OgPoset& p, const OgPoset& q) {
  GrayProduct g;
  g.width = q.size();
  g.index.assign(p.size() * q.size(), 0);
  const int top = p.dim() + q.dim();
  OgPoset::Grades grades(top < 0 ? 0 : static_cast<std::size_t>(top + 1));
  std::vector<std::uint32_t> local(p.size() * q.size(), 0);
  for (int n = 0; n <= top; ++n) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const int dy = n - p.dim_of(x);
      if (dy < 0 || dy > q.dim()) continue;
      for (std::size_t y = 0; y < q.size(); ++y) {
        if (q.dim_of(y) != dy) continue;
        ElementFaces e;
        for (Sign a : kSigns) {
          for (auto fx : p.faces_flat(x, a)) e.of(a).push_back(local[fx * g.width + y]);
          const Sign b = p.dim_of(x) % 2 == 0 ? a : -a;
          for (auto fy : q.faces_flat(y, b)) e.of(a).push_back(local[x * g.width + fy]);
        }
        auto& grade = grades[static_cast<std::size_t>(n)];
        local[x * g.width + y] = static_cast<std::uint32_t>(grade.size());
        grade.push_back(std::move(e));
      }
    }
  }
  g.poset = OgPoset(std::move(grades));
  g.pairs.resize(g.poset.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) {
      const ElemRef r{static_cast<std::uint32_t>(p.dim_of(x) + q.dim_of(y)), local[x * g.width + y]};
      const auto f = g.poset.flat(r);
      g.index[x * g.width + y] = f;
      g.pairs[f] = {x, y};
    }
  return g;
}

OgPoset gray(const OgPoset& p, const OgPoset& q) { return gray_product(p, q).poset; }

std::optional<std::size_t> JoinProduct::find(std::optional<std::size_t> x, std::optional<std::size_t> y) const {
  auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y));
  if (it == pairs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

JoinProduct join_product(const OgPoset& p, const OgPoset& q) {
  // In augment(P) the least element has flat index 0 and x moves to x + 1.
  const auto g = gray_product(augment(p), augment(q));
  JoinProduct j;
  j.poset = diminish(g.poset);
  j.pairs.resize(j.poset.size());
  auto side = [](std::size_t a) -> std::optional<std::size_t> {
    if (a == 0) return std::nullopt;
    return a - 1;
  };
  for (std::size_t f = 1; f < g.poset.size(); ++f) j.pairs[f - 1] = {side(g.pairs[f].first), side(g.pairs[f].second)};
  return j;
}

OgPoset join(const OgPoset& p, const OgPoset& q) { return join_product(p, q).poset; }

OgPoset dual(const OgPoset& p, const std::set<int>& j) {
  auto grades = p.grades();
  for (int d : j)
    if (d > 0 && d < static_cast<int>(grades.size()))
      for (auto& e : grades[static_cast<std::size_t>(d)]) std::swap(e.in, e.out);
  return OgPoset(std::move(grades), p.name());
}

OgPoset total_dual(const OgPoset& p) {
  std::set<int> all;
  for (int d = 1; d <= p.dim(); ++d) all.insert(d);
  return dual(p, all);
}

}  // namespace rdc
