#include "rdc/ogposet.hpp"

#include <algorithm>
#include <set>

namespace rdc {

std::string ElemRef::str() const {
  return "(" + std::to_string(dim) + "," + std::to_string(index) + ")";
}

bool operator==(const ElementFaces& a, const ElementFaces& b) {
  return a.in == b.in && a.out == b.out;
}

OgPoset::OgPoset(Grades grades, std::string name) : name_(std::move(name)), grades_(std::move(grades)) {
  while (!grades_.empty() && grades_.back().empty()) grades_.pop_back();
  for (std::size_t d = 0; d < grades_.size(); ++d) {
    if (grades_[d].empty())
      throw StructureError("grade " + std::to_string(d) + " is empty below a non-empty grade");
    const std::size_t below = d == 0 ? 0 : grades_[d - 1].size();
    for (std::size_t i = 0; i < grades_[d].size(); ++i) {
      auto& e = grades_[d][i];
      const std::string where = ElemRef{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(i)}.str();
      for (Sign s : kSigns) {
        auto& fs = e.of(s);
        std::sort(fs.begin(), fs.end());
        if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
          throw StructureError("duplicate face index in " + where);
        for (auto f : fs)
          if (f >= below) throw ReferenceError("face index out of range in " + where);
      }
      if (d == 0 && !(e.in.empty() && e.out.empty()))
        throw StructureError("0-dimensional element " + where + " has faces");
      if (d > 0 && e.in.empty() && e.out.empty())
        throw StructureError("element " + where + " has no faces");
      std::vector<std::uint32_t> both;
      std::set_intersection(e.in.begin(), e.in.end(), e.out.begin(), e.out.end(), std::back_inserter(both));
      if (!both.empty()) throw StructureError("input and output faces overlap in " + where);
    }
  }
  index();
}

OgPoset OgPoset::point() { return OgPoset(Grades{{ElementFaces{}}}, "point"); }

void OgPoset::index() {
  offsets_.assign(grades_.size() + 1, 0);
  for (std::size_t d = 0; d < grades_.size(); ++d) offsets_[d + 1] = offsets_[d] + grades_[d].size();
  const std::size_t n = size();
  dim_flat_.assign(n, 0);
  for (Sign s : kSigns) {
    face_flat_[idx(s)].assign(n, {});
    coface_flat_[idx(s)].assign(n, {});
  }
  for (std::size_t d = 0; d < grades_.size(); ++d) {
    for (std::size_t i = 0; i < grades_[d].size(); ++i) {
      const std::size_t x = offsets_[d] + i;
      dim_flat_[x] = static_cast<std::uint32_t>(d);
      for (Sign s : kSigns) {
        for (auto f : grades_[d][i].of(s)) {
          const auto y = static_cast<std::uint32_t>(offsets_[d - 1] + f);
          face_flat_[idx(s)][x].push_back(y);
          coface_flat_[idx(s)][y].push_back(static_cast<std::uint32_t>(x));
        }
      }
    }
  }
}

ElemRef OgPoset::ref(std::size_t flat) const {
  const auto d = dim_flat_[flat];
  return ElemRef{d, static_cast<std::uint32_t>(flat - offsets_[d])};
}

void OgPoset::check(ElemRef e) const {
  if (!valid(e)) throw ReferenceError("no element " + e.str());
}

std::vector<ElemRef> OgPoset::faces(ElemRef x, Sign s) const {
  check(x);
  std::vector<ElemRef> out;
  for (auto f : faces_flat(flat(x), s)) out.push_back(ref(f));
  return out;
}

std::vector<ElemRef> OgPoset::cofaces(ElemRef x, Sign s) const {
  check(x);
  std::vector<ElemRef> out;
  for (auto c : cofaces_flat(flat(x), s)) out.push_back(ref(c));
  return out;
}

// Subsets --------------------------------------------------------------------

Subset closure(const OgPoset& p, const Subset& u) {
  Subset c = u;
  // Faces have smaller flat indices, so one downward sweep suffices.
  for (std::size_t x = p.size(); x-- > 0;) {
    if (!c.test(x)) continue;
    for (Sign s : kSigns)
      for (auto f : p.faces_flat(x, s)) c.set(f);
  }
  return c;
}

Subset closure_of(const OgPoset& p, std::span<const ElemRef> refs) {
  Subset u = p.empty_subset();
  for (auto r : refs) {
    p.check(r);
    u.set(p.flat(r));
  }
  return closure(p, u);
}

Subset closure_of(const OgPoset& p, std::size_t flat) { return closure(p, p.singleton(flat)); }

bool is_closed(const OgPoset& p, const Subset& u) { return closure(p, u) == u; }

Subset maximal(const OgPoset& p, const Subset& u) {
  Subset m = p.empty_subset();
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) {
    bool top = true;
    for (Sign s : kSigns)
      for (auto c : p.cofaces_flat(x, s))
        if (u.test(c)) top = false;
    if (top) m.set(x);
  }
  return m;
}

int dim_of(const OgPoset& p, const Subset& u) {
  int d = -1;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) d = std::max(d, p.dim_of(x));
  return d;
}

Subset grade_of(const OgPoset& p, const Subset& u, int d) {
  Subset g = p.empty_subset();
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x))
    if (p.dim_of(x) == d) g.set(x);
  return g;
}

std::vector<std::size_t> members(const Subset& u) {
  std::vector<std::size_t> out;
  out.reserve(u.count());
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) out.push_back(x);
  return out;
}

std::vector<ElemRef> member_refs(const OgPoset& p, const Subset& u) {
  std::vector<ElemRef> out;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) out.push_back(p.ref(x));
  return out;
}

ClosedSubsets closed_subsets(const OgPoset& p, int max_dim, std::optional<std::size_t> limit) {
  ClosedSubsets out;
  Subset cur = p.empty_subset();
  // Decide elements in flat order; faces precede their cofaces.
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (!out.complete) return;
    if (x == p.size()) {
      if (cur.none()) return;
      if (limit && out.subsets.size() >= *limit) {
        out.complete = false;
        return;
      }
      out.subsets.push_back(cur);
      return;
    }
    self(self, x + 1);
    if (p.dim_of(x) > max_dim) return;
    for (Sign s : kSigns)
      for (auto f : p.faces_flat(x, s))
        if (!cur.test(f)) return;
    cur.set(x);
    self(self, x + 1);
    cur.reset(x);
  };
  rec(rec, 0);
  std::sort(out.subsets.begin(), out.subsets.end());
  return out;
}

Restriction restrict_to(const OgPoset& p, const Subset& closed) {
  Restriction r;
  std::vector<std::int64_t> local(p.size(), -1);
  OgPoset::Grades grades;
  for (auto x = closed.find_first(); x != Subset::npos; x = closed.find_next(x)) {
    const auto d = static_cast<std::size_t>(p.dim_of(x));
    if (grades.size() <= d) grades.resize(d + 1);
    local[x] = static_cast<std::int64_t>(grades[d].size());
    ElementFaces e;
    for (Sign s : kSigns)
      for (auto f : p.faces_flat(x, s)) {
        if (local[f] < 0) throw StructureError("restriction to a subset that is not closed");
        e.of(s).push_back(static_cast<std::uint32_t>(local[f]));
      }
    grades[d].push_back(std::move(e));
  }
  r.poset = OgPoset(std::move(grades));
  r.to_ambient.resize(r.poset.size());
  for (auto x = closed.find_first(); x != Subset::npos; x = closed.find_next(x)) {
    const ElemRef lr{static_cast<std::uint32_t>(p.dim_of(x)), static_cast<std::uint32_t>(local[x])};
    r.to_ambient[r.poset.flat(lr)] = x;
  }
  return r;
}

// Morphisms ------------------------------------------------------------------

OgMap OgMap::identity(const OgPoset& p) {
  OgMap m;
  m.assignment.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.assignment[i] = i;
  return m;
}

MorphismReport validate_morphism(const OgPoset& source, const OgPoset& target, const OgMap& f) {
  MorphismReport rep;
  auto fail = [&](std::size_t x, std::optional<Sign> s, std::string why) {
    rep.valid = false;
    rep.witness = source.ref(x);
    rep.sign = s;
    rep.reason = std::move(why);
    return rep;
  };
  if (f.assignment.size() != source.size()) {
    rep.valid = false;
    rep.reason = "assignment is not total";
    return rep;
  }
  for (std::size_t x = 0; x < source.size(); ++x) {
    const auto fx = f(x);
    if (fx >= target.size()) return fail(x, std::nullopt, "image out of range");
    if (source.dim_of(x) != target.dim_of(fx)) return fail(x, std::nullopt, "dimension not preserved");
    for (Sign s : kSigns) {
      auto src = source.faces_flat(x, s);
      auto tgt = target.faces_flat(fx, s);
      std::vector<std::size_t> mapped;
      for (auto y : src) mapped.push_back(f(y));
      std::sort(mapped.begin(), mapped.end());
      std::vector<std::size_t> want(tgt.begin(), tgt.end());
      if (mapped != want) return fail(x, s, "faces not mapped bijectively");
    }
  }
  std::vector<char> hit(target.size(), 0);
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (hit[f(x)]) {
      rep.injective = false;
      break;
    }
    hit[f(x)] = 1;
  }
  return rep;
}

bool is_inclusion(const OgPoset& source, const OgPoset& target, const OgMap& f) {
  auto r = validate_morphism(source, target, f);
  return r.valid && r.injective;
}

Subset image(const OgPoset& target, const OgMap& f, const Subset& u) {
  Subset out = target.empty_subset();
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) out.set(f(x));
  return out;
}

OgMap compose(const OgMap& g, const OgMap& f) {
  OgMap h;
  h.assignment.reserve(f.assignment.size());
  for (auto y : f.assignment) h.assignment.push_back(g(y));
  return h;
}

// Augmentation ---------------------------------------------------------------

OgPoset augment(const OgPoset& p) {
  OgPoset::Grades grades;
  grades.push_back({ElementFaces{}});
  for (std::size_t d = 0; d < p.grades().size(); ++d) {
    auto g = p.grades()[d];
    if (d == 0)
      for (auto& e : g) e.out = {0};
    grades.push_back(std::move(g));
  }
  return OgPoset(std::move(grades), p.name());
}

bool has_positive_least_element(const OgPoset& p) {
  if (p.grade_size(0) != 1) return false;
  // With a single 0-dimensional element every element lies above it.
  return p.cofaces_flat(0, Sign::Minus).empty();
}

OgPoset diminish(const OgPoset& p) {
  if (!has_positive_least_element(p)) throw StructureError("poset has no positive least element");
  OgPoset::Grades grades(p.grades().begin() + 1, p.grades().end());
  if (!grades.empty())
    for (auto& e : grades[0]) e = ElementFaces{};
  return OgPoset(std::move(grades), p.name());
}

bool is_oriented_thin(const OgPoset& p) {
  if (p.grade_size(0) != 1) return false;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p.dim_of(y) < 2) continue;
    // Sign-labelled paths y > z > x, grouped by x.
    std::vector<std::pair<std::size_t, int>> paths;  // (x, product of signs as ±1)
    for (Sign a : kSigns)
      for (auto z : p.faces_flat(y, a))
        for (Sign b : kSigns)
          for (auto x : p.faces_flat(z, b)) paths.emplace_back(x, (a * b) == Sign::Plus ? 1 : -1);
    std::sort(paths.begin(), paths.end());
    for (std::size_t i = 0; i < paths.size();) {
      std::size_t j = i;
      int product = 1;
      while (j < paths.size() && paths[j].first == paths[i].first) product *= paths[j++].second;
      if (j - i != 2 || product != -1) return false;
      i = j;
    }
  }
  return true;
}

}  // namespace rdc
