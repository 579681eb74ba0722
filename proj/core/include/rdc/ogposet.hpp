#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rdc {

// Errors ---------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ReferenceError : Error {
  using Error::Error;
};
struct StructureError : Error {
  using Error::Error;
};
struct CompositionError : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Basic vocabulary -----------------------------------------------------------

enum class Sign : std::uint8_t { Minus = 0, Plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
constexpr std::size_t idx(Sign s) { return static_cast<std::size_t>(s); }
constexpr Sign kSigns[2] = {Sign::Minus, Sign::Plus};
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Position of an element: its dimension and its index within that grade.
struct ElemRef {
  std::uint32_t dim = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const ElemRef&, const ElemRef&) = default;
  std::string str() const;
};

/// Membership bitset over the flat indices of an OgPoset.
using Subset = boost::dynamic_bitset<std::uint64_t>;

// OgPoset --------------------------------------------------------------------

/// Face data of one element: indices into the grade one below.
struct ElementFaces {
  std::vector<std::uint32_t> in;
  std::vector<std::uint32_t> out;

  const std::vector<std::uint32_t>& of(Sign s) const { return s == Sign::Plus ? out : in; }
  std::vector<std::uint32_t>& of(Sign s) { return s == Sign::Plus ? out : in; }
};

/// Oriented graded poset stored grade by grade. Faces always point exactly one
/// grade down, so gradedness holds by construction. Immutable once built.
///
/// Elements also have a flat index (grade offsets in increasing dimension),
/// which is what Subset bitsets are indexed by.
class OgPoset {
 public:
  using Grades = std::vector<std::vector<ElementFaces>>;

  OgPoset() = default;
  /// Validates and normalises (sorts face lists). Throws StructureError.
  explicit OgPoset(Grades grades, std::string name = {});

  static OgPoset empty() { return OgPoset{}; }
  static OgPoset point();

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// -1 for the empty poset.
  int dim() const { return static_cast<int>(grades_.size()) - 1; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t grade_size(int d) const {
    return d < 0 || d > dim() ? 0 : grades_[static_cast<std::size_t>(d)].size();
  }
  const Grades& grades() const { return grades_; }

  std::size_t flat(ElemRef e) const { return offsets_[e.dim] + e.index; }
  ElemRef ref(std::size_t flat) const;
  bool valid(ElemRef e) const { return e.dim < grades_.size() && e.index < grades_[e.dim].size(); }
  void check(ElemRef e) const;

  /// Δ^α x as flat indices.
  std::span<const std::uint32_t> faces_flat(std::size_t x, Sign s) const {
    return face_flat_[idx(s)][x];
  }
  /// ∇^α x as flat indices.
  std::span<const std::uint32_t> cofaces_flat(std::size_t x, Sign s) const {
    return coface_flat_[idx(s)][x];
  }
  int dim_of(std::size_t flat) const { return static_cast<int>(dim_flat_[flat]); }

  std::vector<ElemRef> faces(ElemRef x, Sign s) const;
  std::vector<ElemRef> cofaces(ElemRef x, Sign s) const;

  Subset empty_subset() const { return Subset(size()); }
  Subset full_subset() const {
    Subset s(size());
    s.set();
    return s;
  }
  Subset singleton(std::size_t flat) const {
    Subset s(size());
    s.set(flat);
    return s;
  }

  friend bool operator==(const OgPoset& a, const OgPoset& b) { return a.grades_ == b.grades_; }

 private:
  void index();

  std::string name_;
  Grades grades_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> dim_flat_;
  std::vector<std::vector<std::uint32_t>> face_flat_[2];
  std::vector<std::vector<std::uint32_t>> coface_flat_[2];
};

bool operator==(const ElementFaces& a, const ElementFaces& b);

// Subsets --------------------------------------------------------------------

/// Smallest closed superset.
Subset closure(const OgPoset& p, const Subset& u);
Subset closure_of(const OgPoset& p, std::span<const ElemRef> refs);
Subset closure_of(const OgPoset& p, std::size_t flat);
bool is_closed(const OgPoset& p, const Subset& u);

/// Maximal elements of u (no coface inside u).
Subset maximal(const OgPoset& p, const Subset& u);
/// Dimension of u, -1 if empty.
int dim_of(const OgPoset& p, const Subset& u);
/// Members of u of dimension d.
Subset grade_of(const OgPoset& p, const Subset& u, int d);
std::vector<std::size_t> members(const Subset& u);
std::vector<ElemRef> member_refs(const OgPoset& p, const Subset& u);

/// Non-empty closed subsets whose elements have dimension ≤ max_dim, in
/// lexicographic order of membership. `complete` is false when the limit cut
/// the enumeration short.
struct ClosedSubsets {
  std::vector<Subset> subsets;
  bool complete = true;
};
ClosedSubsets closed_subsets(const OgPoset& p, int max_dim, std::optional<std::size_t> limit = std::nullopt);

/// A closed subset as a standalone poset, together with the inclusion map.
struct Restriction {
  OgPoset poset;
  std::vector<std::size_t> to_ambient;  // flat index in restriction -> flat in ambient
};
Restriction restrict_to(const OgPoset& p, const Subset& closed);

// Morphisms ------------------------------------------------------------------

/// Total assignment between flat indices of two posets.
struct OgMap {
  std::vector<std::size_t> assignment;

  std::size_t operator()(std::size_t x) const { return assignment[x]; }
  static OgMap identity(const OgPoset& p);
};

struct MorphismReport {
  bool valid = true;
  bool injective = true;
  std::optional<ElemRef> witness;  // first violating element
  std::optional<Sign> sign;
  std::string reason;
};

MorphismReport validate_morphism(const OgPoset& source, const OgPoset& target, const OgMap& f);
bool is_inclusion(const OgPoset& source, const OgPoset& target, const OgMap& f);
/// Image of a subset; closed when u is closed and f a morphism.
Subset image(const OgPoset& target, const OgMap& f, const Subset& u);
OgMap compose(const OgMap& g, const OgMap& f);  // g ∘ f

// Augmentation and thinness --------------------------------------------------

/// Adds a least element ⊥ in grade 0 as an output face of every former
/// 0-cell; every other element moves up one grade.
OgPoset augment(const OgPoset& p);
/// Inverse of augment. Throws StructureError without a positive least element.
OgPoset diminish(const OgPoset& p);
bool has_positive_least_element(const OgPoset& p);

/// Every codimension-2 interval [x, y] has exactly two intermediate elements
/// and the four orientation signs on it multiply to −1. Requires a least
/// element; returns false otherwise.
bool is_oriented_thin(const OgPoset& p);

}  // namespace rdc
