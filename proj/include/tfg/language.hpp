#ifndef TFG_LANGUAGE_HPP
#define TFG_LANGUAGE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfg/substitution.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// Decidable language oracle for a minimal subshift: factor enumeration plus
/// membership.  Values are immutable after construction; the factor cache is
/// internally synchronized, so oracles can be shared across threads.
class LanguageOracle {
 public:
  virtual ~LanguageOracle() = default;

  virtual int alphabet_size() const = 0;
  virtual std::string symbol_name(Symbol s) const = 0;

  /// Human-readable rendering of a word over this oracle's alphabet.
  virtual std::string render_word(const Word& w) const = 0;

  /// L_m, sorted lexicographically.  m >= 1.
  const std::vector<Word>& factors(int m) const;

  virtual bool contains(const Word& w) const;

  /// Set when the Morse-Hedlund complexity witness passed at construction
  /// depth.  Group-element identity tests refuse oracles without it.
  bool aperiodicity_checked() const { return aperiodic_attr_; }

  /// Condition (dagger): no word of length five has a repeated letter.
  bool satisfies_dagger() const;

 protected:
  virtual std::vector<Word> compute_factors(int m) const = 0;

  bool aperiodic_attr_ = false;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Word>> factor_cache_;
  mutable std::optional<bool> dagger_cache_;
};

using OraclePtr = std::shared_ptr<const LanguageOracle>;

/// L2 via the two-block fixpoint, seeded from the first power of the rules
/// under which every symbol occurs.  Throws NotPrimitive.
std::set<Word> admissible_two_blocks(const Substitution& sub);

/// Morse-Hedlund witness: |L_n| >= n+1 for all n <= depth.
bool aperiodicity_check(const LanguageOracle& oracle, int depth);

class SubstitutionSystem final : public LanguageOracle {
 public:
  /// Throws NotPrimitive.  Runs the aperiodicity check to `aperiodicity_depth`
  /// and records the result as a system attribute.
  static std::shared_ptr<const SubstitutionSystem> create(Substitution sub,
                                                          int aperiodicity_depth = 16);

  const Substitution& substitution() const { return sub_; }
  const std::set<Word>& two_blocks() const { return two_blocks_; }

  int alphabet_size() const override { return sub_.alphabet().size(); }
  std::string symbol_name(Symbol s) const override { return sub_.alphabet().name(s); }
  std::string render_word(const Word& w) const override { return sub_.alphabet().render(w); }

 protected:
  std::vector<Word> compute_factors(int m) const override;

 private:
  SubstitutionSystem(Substitution sub, std::set<Word> two_blocks)
      : sub_(std::move(sub)), two_blocks_(std::move(two_blocks)) {}

  Substitution sub_;
  std::set<Word> two_blocks_;
};

}  // namespace tfg

#endif
