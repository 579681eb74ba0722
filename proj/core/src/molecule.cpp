#include "rdc/molecule.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace rdc {

// Boundaries -----------------------------------------------------------------

Subset boundary_faces(const OgPoset& p, const Subset& u, int n, Sign s) {
  Subset out = p.empty_subset();
  if (n < 0) return out;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) {
    if (p.dim_of(x) != n) continue;
    bool free = true;
    for (auto c : p.cofaces_flat(x, -s))
      if (u.test(c)) {
        free = false;
        break;
      }
    if (free) out.set(x);
  }
  return out;
}

Subset boundary(const OgPoset& p, const Subset& u, int n, Sign s) {
  if (n < 0) return p.empty_subset();
  Subset gen = boundary_faces(p, u, n, s);
  const Subset top = maximal(p, u);
  for (auto x = top.find_first(); x != Subset::npos; x = top.find_next(x))
    if (p.dim_of(x) < n) gen.set(x);
  return closure(p, gen);
}

Subset boundary(const OgPoset& p, const Subset& u, int n) {
  return boundary(p, u, n, Sign::Minus) | boundary(p, u, n, Sign::Plus);
}

Subset interior(const OgPoset& p, const Subset& u) {
  return u - boundary(p, u, dim_of(p, u) - 1);
}

namespace {

using BoundaryTable = std::vector<std::array<Subset, 2>>;

BoundaryTable boundary_table(const OgPoset& p, const Subset& u, int d) {
  BoundaryTable t(static_cast<std::size_t>(std::max(d, 0)));
  for (int n = 0; n < d; ++n)
    for (Sign s : kSigns) t[static_cast<std::size_t>(n)][idx(s)] = boundary(p, u, n, s);
  return t;
}

bool globular_with(const OgPoset& p, const BoundaryTable& t, int d) {
  for (int n = 1; n < d; ++n)
    for (Sign b : kSigns)
      for (int k = 0; k < n; ++k)
        for (Sign a : kSigns)
          if (boundary(p, t[static_cast<std::size_t>(n)][idx(b)], k, a) != t[static_cast<std::size_t>(k)][idx(a)])
            return false;
  return true;
}

}  // namespace

bool is_globular(const OgPoset& p, const Subset& u) {
  const int d = dim_of(p, u);
  return globular_with(p, boundary_table(p, u, d), d);
}

bool is_round(const OgPoset& p, const Subset& u) {
  const int d = dim_of(p, u);
  const auto t = boundary_table(p, u, d);
  if (!globular_with(p, t, d)) return false;
  for (int n = 0; n < d; ++n) {
    const auto& b = t[static_cast<std::size_t>(n)];
    const Subset below = n == 0 ? p.empty_subset()
                                : (t[static_cast<std::size_t>(n - 1)][0] | t[static_cast<std::size_t>(n - 1)][1]);
    if ((b[0] & b[1]) != below) return false;
  }
  return true;
}

// Witnesses ------------------------------------------------------------------

WitnessPtr transport(const WitnessPtr& w, const std::vector<std::size_t>& map, std::size_t target_size) {
  if (!w) return nullptr;
  auto out = std::make_shared<Witness>();
  out->kind = w->kind;
  out->k = w->k;
  out->top = map[w->top];
  out->support = Subset(target_size);
  for (auto x = w->support.find_first(); x != Subset::npos; x = w->support.find_next(x)) out->support.set(map[x]);
  out->first = transport(w->first, map, target_size);
  out->second = transport(w->second, map, target_size);
  return out;
}

std::size_t witness_size(const Witness& w) {
  std::size_t n = 1;
  if (w.first) n += witness_size(*w.first);
  if (w.second) n += witness_size(*w.second);
  return n;
}

namespace {

WitnessPtr make_point(const Subset& support, std::size_t x) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::Point;
  w->support = support;
  w->top = x;
  return w;
}

WitnessPtr make_paste(const Subset& support, int k, WitnessPtr a, WitnessPtr b) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::Paste;
  w->support = support;
  w->k = k;
  w->top = a->top;
  w->first = std::move(a);
  w->second = std::move(b);
  return w;
}

WitnessPtr make_atom(const Subset& support, std::size_t top, WitnessPtr in, WitnessPtr out) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::Atom;
  w->support = support;
  w->top = top;
  w->first = std::move(in);
  w->second = std::move(out);
  return w;
}

// Builds the poset with u's elements first and the listed elements of v
// appended. `glue` sends v's shared elements to u's flat indices.
struct Gluing {
  OgPoset::Grades grades;
  std::vector<ElemRef> left;   // u flat -> result ref
  std::vector<ElemRef> right;  // v flat -> result ref
};

Gluing glue(const OgPoset& u, const OgPoset& v, const std::vector<std::optional<std::size_t>>& shared) {
  Gluing g;
  g.grades = u.grades();
  for (std::size_t x = 0; x < u.size(); ++x) g.left.push_back(u.ref(x));
  g.right.resize(v.size());
  for (std::size_t y = 0; y < v.size(); ++y) {
    if (shared[y]) {
      g.right[y] = u.ref(*shared[y]);
      continue;
    }
    const auto d = static_cast<std::size_t>(v.dim_of(y));
    if (g.grades.size() <= d) g.grades.resize(d + 1);
    ElementFaces e;
    for (Sign s : kSigns)
      for (auto f : v.faces_flat(y, s)) e.of(s).push_back(g.right[f].index);
    g.right[y] = ElemRef{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(g.grades[d].size())};
    g.grades[d].push_back(std::move(e));
  }
  return g;
}

std::vector<std::size_t> flatten(const OgPoset& p, const std::vector<ElemRef>& refs) {
  std::vector<std::size_t> out;
  out.reserve(refs.size());
  for (auto r : refs) out.push_back(p.flat(r));
  return out;
}

}  // namespace

// Constructors ---------------------------------------------------------------

Molecule point() {
  Molecule m{OgPoset::point(), nullptr};
  m.witness = make_point(m.shape.full_subset(), 0);
  return m;
}

PasteResult paste_with_maps(const Molecule& u, const Molecule& v, int k) {
  if (k < 0 || k >= std::min(u.dim(), v.dim()))
    throw RangeError("pasting dimension " + std::to_string(k) + " out of range");
  const auto bu = restrict_to(u.shape, boundary(u.shape, u.shape.full_subset(), k, Sign::Plus));
  const auto bv = restrict_to(v.shape, boundary(v.shape, v.shape.full_subset(), k, Sign::Minus));
  const auto phi = find_isomorphism(bu.poset, bv.poset);
  if (!phi) throw CompositionError("boundaries are not isomorphic at dimension " + std::to_string(k));

  std::vector<std::optional<std::size_t>> shared(v.size());
  for (std::size_t i = 0; i < bu.poset.size(); ++i) shared[bv.to_ambient[(*phi)(i)]] = bu.to_ambient[i];
  auto g = glue(u.shape, v.shape, shared);

  PasteResult r;
  r.molecule.shape = OgPoset(std::move(g.grades));
  r.left_map = flatten(r.molecule.shape, g.left);
  r.right_map = flatten(r.molecule.shape, g.right);
  const auto n = r.molecule.shape.size();
  r.molecule.witness =
      make_paste(r.molecule.shape.full_subset(), k, transport(u.witness, r.left_map, n), transport(v.witness, r.right_map, n));
  return r;
}

Molecule paste(const Molecule& u, const Molecule& v, int k) { return paste_with_maps(u, v, k).molecule; }

Molecule atom(const Molecule& u, const Molecule& v) {
  const int d = u.dim();
  if (d != v.dim()) throw CompositionError("sides of an atom must have equal dimension");
  if (!is_round(u.shape) || !is_round(v.shape)) throw CompositionError("sides of an atom must be round");

  std::vector<std::optional<std::size_t>> shared(v.size());
  std::vector<std::optional<std::size_t>> forward(u.size());
  for (Sign s : kSigns) {
    const auto bu = restrict_to(u.shape, boundary(u.shape, u.shape.full_subset(), d - 1, s));
    const auto bv = restrict_to(v.shape, boundary(v.shape, v.shape.full_subset(), d - 1, s));
    const auto phi = find_isomorphism(bu.poset, bv.poset);
    if (!phi) throw CompositionError(std::string("boundaries do not match on the ") + sign_char(s) + " side");
    for (std::size_t i = 0; i < bu.poset.size(); ++i) {
      const auto x = bu.to_ambient[i];
      const auto y = bv.to_ambient[(*phi)(i)];
      if ((forward[x] && *forward[x] != y) || (shared[y] && *shared[y] != x))
        throw CompositionError("boundary isomorphisms do not agree");
      forward[x] = y;
      shared[y] = x;
    }
  }
  auto g = glue(u.shape, v.shape, shared);

  ElementFaces top;
  for (std::size_t x = 0; x < u.size(); ++x)
    if (u.shape.dim_of(x) == d) top.in.push_back(g.left[x].index);
  for (std::size_t y = 0; y < v.size(); ++y)
    if (v.shape.dim_of(y) == d) top.out.push_back(g.right[y].index);
  if (g.grades.size() <= static_cast<std::size_t>(d + 1)) g.grades.resize(static_cast<std::size_t>(d + 2));
  g.grades[static_cast<std::size_t>(d + 1)].push_back(std::move(top));

  Molecule m;
  m.shape = OgPoset(std::move(g.grades));
  const auto left = flatten(m.shape, g.left);
  const auto right = flatten(m.shape, g.right);
  const auto n = m.shape.size();
  m.witness = make_atom(m.shape.full_subset(), n - 1, transport(u.witness, left, n), transport(v.witness, right, n));
  return m;
}

// Isomorphisms ---------------------------------------------------------------

namespace {

using Signature = std::array<std::size_t, 5>;

Signature signature(const OgPoset& p, std::size_t x) {
  return {static_cast<std::size_t>(p.dim_of(x)), p.faces_flat(x, Sign::Minus).size(), p.faces_flat(x, Sign::Plus).size(),
          p.cofaces_flat(x, Sign::Minus).size(), p.cofaces_flat(x, Sign::Plus).size()};
}

class IsoSearch {
 public:
  IsoSearch(const OgPoset& a, const OgPoset& b, std::size_t limit) : a_(a), b_(b), limit_(limit) {
    sig_a_.reserve(a.size());
    sig_b_.reserve(b.size());
    for (std::size_t x = 0; x < a.size(); ++x) sig_a_.push_back(signature(a, x));
    for (std::size_t y = 0; y < b.size(); ++y) sig_b_.push_back(signature(b, y));
    fwd_.assign(a.size(), kNone);
    bwd_.assign(b.size(), kNone);
  }

  std::vector<OgMap> run() {
    if (a_.size() != b_.size() || a_.dim() != b_.dim()) return {};
    for (int d = 0; d <= a_.dim(); ++d)
      if (a_.grade_size(d) != b_.grade_size(d)) return {};
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
    search(0);
    return std::move(found_);
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;

  bool consistent(std::size_t x, std::size_t y) const {
    if (bwd_[y] != kNone || sig_a_[x] != sig_b_[y]) return false;
    for (Sign s : kSigns) {
      for (auto f : a_.faces_flat(x, s))
        if (fwd_[f] != kNone && !contains(b_.faces_flat(y, s), fwd_[f])) return false;
      for (auto c : a_.cofaces_flat(x, s))
        if (fwd_[c] != kNone && !contains(b_.faces_flat(fwd_[c], s), y)) return false;
    }
    return true;
  }

  static bool contains(std::span<const std::uint32_t> xs, std::size_t v) {
    return std::binary_search(xs.begin(), xs.end(), static_cast<std::uint32_t>(v));
  }

  // Candidate images for x, derived from one assigned neighbour when possible.
  std::vector<std::size_t> candidates(std::size_t x) const {
    std::vector<std::size_t> pool;
    bool anchored = false;
    for (Sign s : kSigns) {
      for (auto f : a_.faces_flat(x, s))
        if (!anchored && fwd_[f] != kNone) {
          auto cs = b_.cofaces_flat(fwd_[f], s);
          pool.assign(cs.begin(), cs.end());
          anchored = true;
        }
      for (auto c : a_.cofaces_flat(x, s))
        if (!anchored && fwd_[c] != kNone) {
          auto fs = b_.faces_flat(fwd_[c], s);
          pool.assign(fs.begin(), fs.end());
          anchored = true;
        }
    }
    if (!anchored) {
      pool.resize(b_.size());
      std::iota(pool.begin(), pool.end(), 0);
    }
    std::vector<std::size_t> out;
    for (auto y : pool)
      if (consistent(x, y)) out.push_back(y);
    return out;
  }

  bool anchored(std::size_t x) const {
    for (Sign s : kSigns) {
      for (auto f : a_.faces_flat(x, s))
        if (fwd_[f] != kNone) return true;
      for (auto c : a_.cofaces_flat(x, s))
        if (fwd_[c] != kNone) return true;
    }
    return false;
  }

  void search(std::size_t assigned) {
    if (found_.size() >= limit_) return;
    if (assigned == a_.size()) {
      found_.push_back(OgMap{fwd_});
      return;
    }
    // Most constrained element among those touching the assigned part; the
    // first unassigned element when nothing touches it.
    std::size_t best = kNone;
    std::vector<std::size_t> best_cands;
    for (std::size_t x = 0; x < a_.size(); ++x) {
      if (fwd_[x] != kNone || !anchored(x)) continue;
      auto c = candidates(x);
      if (best == kNone || c.size() < best_cands.size()) {
        best = x;
        best_cands = std::move(c);
        if (best_cands.size() <= 1) break;
      }
    }
    if (best == kNone) {
      for (std::size_t x = 0; x < a_.size(); ++x)
        if (fwd_[x] == kNone) {
          best = x;
          best_cands = candidates(x);
          break;
        }
    }
    for (auto y : best_cands) {
      fwd_[best] = y;
      bwd_[y] = best;
      search(assigned + 1);
      fwd_[best] = kNone;
      bwd_[y] = kNone;
      if (found_.size() >= limit_) return;
    }
  }

  const OgPoset& a_;
  const OgPoset& b_;
  std::size_t limit_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<std::size_t> fwd_, bwd_;
  std::vector<OgMap> found_;
};

}  // namespace

std::vector<OgMap> find_isomorphisms(const OgPoset& a, const OgPoset& b, std::size_t limit) {
  if (limit == 0) return {};
  return IsoSearch(a, b, limit).run();
}

std::optional<OgMap> find_isomorphism(const OgPoset& a, const OgPoset& b) {
  auto all = find_isomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::optional<OgMap> unique_molecule_iso(const Molecule& u, const Molecule& v, bool exhaustive) {
  if (!u.witness || !v.witness) throw StructureError("isomorphism of molecules requires witnesses");
  auto all = find_isomorphisms(u.shape, v.shape, exhaustive ? 2 : 1);
  if (all.size() > 1) throw StructureError("isomorphism of molecules is not unique");
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

// Recognition ----------------------------------------------------------------

WitnessPtr Recognizer::recognize(const Subset& u) {
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  WitnessPtr result;
  if (u.any() && is_closed(p_, u)) {
    const Subset top = maximal(p_, u);
    if (top.count() == 1) {
      const auto x = top.find_first();
      const int d = p_.dim_of(x);
      result = d == 0 ? make_point(u, x) : recognize_atom(u, x, d);
    } else {
      // Layering dimension: least k with at most one maximal element above k + 1.
      int k = -1;
      for (;; ++k) {
        std::size_t above = 0;
        for (auto x = top.find_first(); x != Subset::npos; x = top.find_next(x))
          if (p_.dim_of(x) > k + 1) ++above;
        if (above <= 1) break;
      }
      if (k >= 0) result = recognize_layered(u, k);
    }
  }
  memo_.emplace(u, result);
  return result;
}

WitnessPtr Recognizer::recognize_atom(const Subset& u, std::size_t top, int d) {
  const Subset in = boundary(p_, u, d - 1, Sign::Minus);
  const Subset out = boundary(p_, u, d - 1, Sign::Plus);
  Subset all = in | out;
  all.set(top);
  if (all != u) return nullptr;
  if (dim_of(p_, in) != d - 1 || dim_of(p_, out) != d - 1) return nullptr;
  for (Sign s : kSigns)
    if (boundary(p_, in, d - 2, s) != boundary(p_, out, d - 2, s)) return nullptr;
  if ((in & out) != boundary(p_, in, d - 2)) return nullptr;
  auto wi = recognize(in);
  if (!wi) return nullptr;
  auto wo = recognize(out);
  if (!wo) return nullptr;
  if (!is_round(p_, in) || !is_round(p_, out)) return nullptr;
  return make_atom(u, top, std::move(wi), std::move(wo));
}

namespace {

// Maximal elements of dimension > k, with the edges of MaxFlowₖ among them.
struct MaxFlowData {
  std::vector<std::size_t> verts;
  std::vector<std::vector<std::size_t>> succ;  // positions in verts
};

MaxFlowData max_flow_data(const OgPoset& p, const Subset& u, int k) {
  MaxFlowData m;
  const Subset top = maximal(p, u);
  for (auto x = top.find_first(); x != Subset::npos; x = top.find_next(x))
    if (p.dim_of(x) > k) m.verts.push_back(x);
  std::vector<Subset> out_faces, in_faces;
  for (auto x : m.verts) {
    const Subset c = closure_of(p, x);
    out_faces.push_back(boundary_faces(p, c, k, Sign::Plus));
    in_faces.push_back(boundary_faces(p, c, k, Sign::Minus));
  }
  m.succ.resize(m.verts.size());
  for (std::size_t i = 0; i < m.verts.size(); ++i)
    for (std::size_t j = 0; j < m.verts.size(); ++j)
      if (out_faces[i].intersects(in_faces[j])) m.succ[i].push_back(j);
  return m;
}

}  // namespace

WitnessPtr Recognizer::recognize_layered(const Subset& u, int k) {
  const auto flow = max_flow_data(p_, u, k);
  const std::size_t m = flow.verts.size();
  std::vector<std::size_t> indegree(m, 0);
  for (const auto& s : flow.succ)
    for (auto j : s) ++indegree[j];
  std::vector<Subset> cl;
  for (auto x : flow.verts) cl.push_back(closure_of(p_, x));

  std::unordered_set<Subset> dead;
  std::vector<char> used(m, 0);
  const Subset target_out = boundary(p_, u, k, Sign::Plus);

  std::function<WitnessPtr(const Subset&, const Subset&, WitnessPtr, std::size_t)> step =
      [&](const Subset& w, const Subset& c, WitnessPtr wit, std::size_t placed) -> WitnessPtr {
    if (placed == m) return (w == u && c == target_out) ? wit : nullptr;
    if (dead.count(w)) return nullptr;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || indegree[i] != 0) continue;
      const Subset layer = cl[i] | c;
      if ((w & layer) != c) continue;
      auto wl = recognize(layer);
      if (!wl || boundary(p_, layer, k, Sign::Minus) != c) continue;
      const Subset next_w = w | layer;
      const Subset next_c = boundary(p_, layer, k, Sign::Plus);
      WitnessPtr next_wit = wit ? make_paste(next_w, k, wit, wl) : wl;
      used[i] = 1;
      for (auto j : flow.succ[i]) --indegree[j];
      auto r = step(next_w, next_c, std::move(next_wit), placed + 1);
      for (auto j : flow.succ[i]) ++indegree[j];
      used[i] = 0;
      if (r) return r;
    }
    dead.insert(w);
    return nullptr;
  };
  const Subset start = boundary(p_, u, k, Sign::Minus);
  return step(start, start, nullptr, 0);
}

std::optional<std::vector<Subset>> Recognizer::realize_layering(const Subset& u, int k,
                                                                const std::vector<std::size_t>& order) {
  if (k < 0 && order.size() > 1) return std::nullopt;
  Subset c = boundary(p_, u, k, Sign::Minus);
  Subset w = c;
  std::vector<Subset> layers;
  for (auto x : order) {
    const Subset layer = closure_of(p_, x) | c;
    if ((w & layer) != c) return std::nullopt;
    if (!recognize(layer) || boundary(p_, layer, k, Sign::Minus) != c) return std::nullopt;
    w |= layer;
    c = boundary(p_, layer, k, Sign::Plus);
    layers.push_back(layer);
  }
  if (w != u || c != boundary(p_, u, k, Sign::Plus)) return std::nullopt;
  return layers;
}

std::optional<Molecule> is_molecule(const OgPoset& p) {
  if (p.size() == 0) return std::nullopt;
  Recognizer rec(p);
  auto w = rec.recognize_all();
  if (!w) return std::nullopt;
  return Molecule{p, std::move(w)};
}

bool is_atom(const OgPoset& p) {
  if (p.size() == 0 || maximal(p, p.full_subset()).count() != 1) return false;
  return is_molecule(p).has_value();
}

bool is_regular_directed_complex(const OgPoset& p) {
  Recognizer rec(p);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!rec.recognize(closure_of(p, x))) return false;
  return true;
}

Molecule rebuild(const OgPoset& ambient, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Point:
      return point();
    case Witness::Kind::Paste:
      return paste(rebuild(ambient, *w.first), rebuild(ambient, *w.second), w.k);
    case Witness::Kind::Atom:
      return atom(rebuild(ambient, *w.first), rebuild(ambient, *w.second));
  }
  throw StructureError("unknown witness kind");
}

// Submolecules ---------------------------------------------------------------

namespace {

// Connected components of the elements of u above dimension k, linked by faces.
std::vector<Subset> components_above(const OgPoset& p, const Subset& u, int k) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) {
    if (p.dim_of(x) <= k) continue;
    for (Sign s : kSigns)
      for (auto f : p.faces_flat(x, s))
        if (p.dim_of(f) > k) parent[find(f)] = find(x);
  }
  std::map<std::size_t, Subset> groups;
  for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) {
    if (p.dim_of(x) <= k) continue;
    auto [it, fresh] = groups.try_emplace(find(x), p.empty_subset());
    it->second.set(x);
  }
  std::vector<Subset> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

void collect_submolecules(Recognizer& rec, const Subset& v, std::set<Subset>& seen) {
  if (!seen.insert(v).second) return;
  const OgPoset& p = rec.ambient();
  const int d = dim_of(p, v);
  for (int k = 0; k < d; ++k) {
    const Subset in = boundary(p, v, k, Sign::Minus);
    const Subset out = boundary(p, v, k, Sign::Plus);
    collect_submolecules(rec, in, seen);
    collect_submolecules(rec, out, seen);
    const auto comps = components_above(p, v, k);
    const std::size_t c = comps.size();
    if (c < 2) continue;
    if (c >= 8 * sizeof(unsigned long long)) throw RangeError("too many components for submolecule search");
    for (unsigned long long mask = 1; mask + 1 < (1ULL << c); ++mask) {
      Subset sa = p.empty_subset(), sb = p.empty_subset();
      for (std::size_t i = 0; i < c; ++i) ((mask >> i) & 1ULL ? sa : sb) |= comps[i];
      const Subset a = closure(p, sa) | in;
      const Subset b = closure(p, sb) | out;
      if ((a | b) != v) continue;
      const Subset shared = a & b;
      if (shared != boundary(p, a, k, Sign::Plus) || shared != boundary(p, b, k, Sign::Minus)) continue;
      if (!rec.recognize(a) || !rec.recognize(b)) continue;
      collect_submolecules(rec, a, seen);
      collect_submolecules(rec, b, seen);
    }
  }
}

}  // namespace

std::vector<Subset> submolecules(Recognizer& rec, const Subset& u) {
  std::set<Subset> seen;
  collect_submolecules(rec, u, seen);
  return {seen.begin(), seen.end()};
}

std::vector<Subset> submolecules(const Molecule& m) {
  Recognizer rec(m.shape);
  return submolecules(rec, m.shape.full_subset());
}

}  // namespace rdc
