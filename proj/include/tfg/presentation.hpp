#ifndef TFG_PRESENTATION_HPP
#define TFG_PRESENTATION_HPP

#include <string>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/group.hpp"
#include "tfg/language.hpp"
#include "tfg/word.hpp"

namespace tfg {

struct FreeLetter {
  int gen = 0;   // index into the base generator table
  int exp = 1;   // +1 or -1
  auto operator<=>(const FreeLetter&) const = default;
};

/// A word in the free group over the base generators {x_{(w,1)} : w in L_3}.
using FreeWord = std::vector<FreeLetter>;

FreeWord free_reduce(FreeWord w);
FreeWord inverse_free(const FreeWord& w);
/// r*s = s r^-1 s^-1 r, formally.
FreeWord star_free(const FreeWord& r, const FreeWord& s);

struct PresentationBounds {
  int max_word_len = 5;   // W
  int depth = 2;          // refinement depth for the partition schema
  int offset_min = 1;
  int offset_max = 1 << 20;  // intersected with |w|-1
};

struct Relator {
  std::string tag;     // "R1".."R5"
  std::string label;   // schema instance, e.g. "R3 (0-1-2,1)"
  FreeWord word;
};

struct Presentation {
  OraclePtr sys;
  PresentationBounds bounds;
  std::vector<Word> generators;  // L_3, sorted; generator k is x_{(gen[k],1)}
  std::vector<Relator> relators;
};

/// Rewrites x_{(w,k)} as a word over the base generators whose evaluation is
/// sigma_{(w,k)}: length 3 and k=1 is a single letter, k=1 goes through the
/// nested star convolution, 2 <= k <= |w|-1 through the offset-moving
/// convolution; (|w|=3, k=2) is reached by a one-symbol right refinement.
/// Offsets outside 1..|w|-1 are UnsupportedOffset.  Requires dagger.
FreeWord tietze_expand(const OraclePtr& sys, const Word& w, int k);

/// Emits the truncated relator families R1-R5 within the bounds, each stored
/// Tietze-expanded over the base generators.  Deterministic order:
/// (|w|, w, i, tag).
Presentation enumerate_relators(const OraclePtr& sys, const PresentationBounds& bounds);

GroupElement evaluate_free_word(const Presentation& p, const FreeWord& w);

struct VerifyReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Evaluates every relator; any non-identity is reported (it would point at
/// a bug in the emission or evaluation machinery).
VerifyReport verify_relators(const Presentation& p);

/// Finite oracle for the relation schema: instantiates y_i -> (i,i+1,i+2) in
/// Sym(n), checks the four relation families, and checks the generated
/// subgroup has order n!/2.  n >= 5.
bool alt_presentation_check(int n);
long long alt_group_order(int n);  // breadth-first closure size

/// Deterministic text format: header, "gen k: x[(w),1]" lines, then
/// "rel <tag>: <token sequence>" in full-group token syntax.
std::string export_presentation(const Presentation& p, const std::string& system_label);

}  // namespace tfg

#endif
