#ifndef TFG_SUBSTITUTION_HPP
#define TFG_SUBSTITUTION_HPP

#include <string>
#include <vector>

#include "tfg/word.hpp"

namespace tfg {

/// A substitution (rewriting system) over a finite alphabet: each symbol maps
/// to a nonempty word.  Primitive aperiodic substitutions are the concrete
/// subshift family the whole workbench runs on.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& rule(Symbol s) const { return rules_[static_cast<size_t>(s)]; }

  Word apply(const Word& w) const;
  Word iterate(const Word& w, int times) const;

  /// Loads {"alphabet": ["a","b"], "rules": {"a": "ab", "b": "a"}}.
  static Substitution from_json_file(const std::string& path);
  static Substitution from_json_text(const std::string& text);

 private:
  Alphabet alphabet_;
  std::vector<Word> rules_;
};

/// True iff some power k <= (|A|-1)^2 + 1 of the incidence matrix is
/// entrywise positive.
bool is_primitive(const Substitution& sub);

}  // namespace tfg

#endif
