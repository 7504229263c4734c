#ifndef TFG_GROUP_HPP
#define TFG_GROUP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/language.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// An element of the topological full group G_T, stored as its orbit cocycle:
/// a total map from the admissible centered words of some radius M to integer
/// shifts.  The induced homeomorphism is S(x) = T^{f(x)}(x).  On an aperiodic
/// system S is the identity iff f is identically zero, which is what makes
/// the word problem a plain table lookup.
class GroupElement {
 public:
  static GroupElement identity(OraclePtr sys);

  /// The shift T itself (constant cocycle 1).
  static GroupElement shift(OraclePtr sys);

  /// Builds an element from cocycle pieces.  The pieces must partition Omega
  /// (NotAPartition) and the induced map must be a bijection (NotBijective);
  /// bijectivity is certified by constructing the inverse cocycle.
  static GroupElement from_cocycle(const std::vector<std::pair<ClopenSet, int>>& pieces);

  const OraclePtr& system() const { return sys_; }
  int radius() const { return radius_; }
  const std::map<Word, int>& cocycle() const { return shifts_; }
  int max_abs_shift() const;

  GroupElement refined(int radius) const;
  GroupElement reduced() const;

  GroupElement inverse() const;

  /// Clopen set where the cocycle is nonzero.  S maps its support onto
  /// itself, so disjoint supports commute.
  ClopenSet support() const;

  bool is_identity() const;
  bool equals(const GroupElement& rhs) const;

  /// Cocycle value on a point known through a centered window of radius >=
  /// this element's radius.
  int shift_at(const Word& window) const;

 private:
  GroupElement(OraclePtr sys, int radius, std::map<Word, int> shifts)
      : sys_(std::move(sys)), radius_(radius), shifts_(std::move(shifts)) {}

  friend GroupElement compose(const GroupElement& g, const GroupElement& h);
  friend GroupElement sigma(const ClopenSet& u);

  OraclePtr sys_;
  int radius_;
  std::map<Word, int> shifts_;
};

/// g*h acting on the left: apply h first.  Cocycle identity
/// f_{gh}(x) = f_g(h(x)) + f_h(x).
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// sigma_U: T on U u TU, T^-2 on T^2U, identity elsewhere.  Requires
/// U, TU, T^2U pairwise disjoint (OverlapViolation).  sigma of the empty set
/// is the identity.
GroupElement sigma(const ClopenSet& u);
GroupElement sigma(const OraclePtr& sys, const Cylinder& c);

/// r*s = s r^-1 s^-1 r.
GroupElement star(const GroupElement& r, const GroupElement& s);

/// One letter of a generator word: a cylinder with exponent +-1.
/// Token syntax "s[(0-2-3),1]" and "s[(0-2-3),1]^-1".
struct GeneratorSymbol {
  Cylinder cyl;
  int exponent = 1;

  std::string token() const;
  static GeneratorSymbol parse_token(const std::string& token);
};

std::vector<GeneratorSymbol> parse_generator_word(const std::string& text);
std::string render_generator_word(const std::vector<GeneratorSymbol>& word);

/// Product of the symbols' sigma elements, left-to-right acting on the left.
/// Symbols whose cylinder word is not in the language are the identity.
GroupElement evaluate_word(const OraclePtr& sys, const std::vector<GeneratorSymbol>& word);

/// Word membership via the group: w in L(Omega) iff the nested star
/// expression over the sigma generators is not the identity.  Requires the
/// dagger condition and |w| >= 4 (TooShort).
bool membership_via_identity(const OraclePtr& sys, const Word& w);

struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Sweeps the sigma relation schema on a dagger system: order three, braid
/// square, star shift, partition (one-symbol refinements), and commutation of
/// 3-disjoint pairs, for |w|,|v| <= max_word_len and offsets in
/// [offset_min, min(offset_max, |w|-1)].
RelationReport check_relation_schema(const OraclePtr& sys, int max_word_len,
                                     int offset_min = 1, int offset_max = 1 << 20);

}  // namespace tfg

#endif
