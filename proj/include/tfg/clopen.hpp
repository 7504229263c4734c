#ifndef TFG_CLOPEN_HPP
#define TFG_CLOPEN_HPP

#include <set>
#include <string>
#include <vector>

#include "tfg/language.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// The cylinder (w,i) = T^i[.w] = { omega : omega_{j-i} = w_j, 0 <= j < |w| }.
/// Offsets may be any integer.  Empty iff w is not in the language.
struct Cylinder {
  Word word;
  int offset = 0;

  /// Smallest radius at which the cylinder is expressible in centered form.
  int min_radius() const;

  /// "(0 2 3, 1)" with the word over symbol indices.
  std::string render() const;

  auto operator<=>(const Cylinder&) const = default;
};

/// A clopen subset of Omega in canonical centered-word form: the set of
/// admissible words z of length 2M read as omega[-M..M-1].  Two sets denote
/// the same subset iff, refined to a common radius, the member sets agree.
class ClopenSet {
 public:
  static ClopenSet empty(OraclePtr sys, int radius = 1);
  static ClopenSet whole(OraclePtr sys, int radius = 1);
  static ClopenSet from_members(OraclePtr sys, int radius, std::set<Word> members);

  const OraclePtr& system() const { return sys_; }
  int radius() const { return radius_; }
  const std::set<Word>& members() const { return members_; }
  bool is_empty() const { return members_.empty(); }

  ClopenSet refined(int radius) const;

  /// Shrinks the radius as far as membership stays determined by the shorter
  /// central window.
  ClopenSet reduced() const;

  /// T^k of the denoted set.
  ClopenSet shifted(int k) const;

  ClopenSet unite(const ClopenSet& rhs) const;
  ClopenSet intersect(const ClopenSet& rhs) const;
  ClopenSet subtract(const ClopenSet& rhs) const;
  ClopenSet complement() const;

  bool subset_of(const ClopenSet& rhs) const;
  bool disjoint_from(const ClopenSet& rhs) const;
  bool same_set(const ClopenSet& rhs) const;

  /// Whether a point with centered window `window` (radius >= this radius)
  /// lies in the set.
  bool contains_window(const Word& window) const;

 private:
  ClopenSet(OraclePtr sys, int radius, std::set<Word> members)
      : sys_(std::move(sys)), radius_(radius), members_(std::move(members)) {}

  OraclePtr sys_;
  int radius_;
  std::set<Word> members_;
};

/// Centered form of a cylinder at radius M >= max(i, |w|-i, 1).
/// Throws RadiusTooSmall.
ClopenSet to_clopen(OraclePtr sys, const Cylinder& c, int radius);
ClopenSet to_clopen(OraclePtr sys, const Cylinder& c);

ClopenSet shift_clopen(const ClopenSet& s, int k);

enum class CylinderRelation { Subset, Disjoint, Undecided };

/// Textual decision for a nonempty cylinder against another whose pinned
/// coordinate range it covers: the letters either match (subset) or clash
/// (disjoint).  Undecided when the ranges do not nest.
CylinderRelation quick_cylinder_relation(const Cylinder& inner, const Cylinder& outer);

bool is_subset(const OraclePtr& sys, const Cylinder& c1, const Cylinder& c2);

/// (U u TU u T^2U) disjoint from (V u TV u T^2V) for the denoted sets.
bool are_3disjoint(const OraclePtr& sys, const Cylinder& c1, const Cylinder& c2);
bool are_3disjoint(const ClopenSet& u, const ClopenSet& v);

/// Pairwise disjoint, each inside target, union equal to target.
bool verify_cylinder_partition(const OraclePtr& sys, const Cylinder& target,
                               const std::vector<Cylinder>& parts);

/// {(a.w, i+1) : aw admissible}; throws NotInLanguage.
std::vector<Cylinder> left_refinement(const OraclePtr& sys, const Cylinder& c);
/// {(w.b, i) : wb admissible}; throws NotInLanguage.
std::vector<Cylinder> right_refinement(const OraclePtr& sys, const Cylinder& c);

}  // namespace tfg

#endif
