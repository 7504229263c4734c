#ifndef TFG_RECODER_HPP
#define TFG_RECODER_HPP

#include <memory>
#include <vector>

#include "tfg/language.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// Least n0 >= 1 such that for every w in L_{n0} and i in {1,..,4} no word of
/// L_{n0+4} carries w both at position 0 and at position i.  Recoding with
/// block length n0 yields a system where no length-five word repeats a letter.
int find_n0(const LanguageOracle& oracle, int ceiling = 32);

/// The conjugate subshift over alphabet B = L_{n0}(X), with B-symbols ordered
/// lexicographically by their underlying X-words.  Membership is answered by
/// decoding back to the X-system.
class RecodedSystem final : public LanguageOracle {
 public:
  static std::shared_ptr<const RecodedSystem> create(OraclePtr base, int ceiling = 32);

  const OraclePtr& base() const { return base_; }
  int n0() const { return n0_; }
  const std::vector<Word>& b_alphabet() const { return b_words_; }

  /// X-word of length |z| + n0 - 1 from overlapping the symbol words.
  /// Throws NotInLanguage when consecutive symbols do not overlap.
  Word decode_word(const Word& z) const;

  /// Y-word of length |w| - n0 + 1; the j-th symbol names w[j..j+n0-1].
  /// Throws TooShort / NotInLanguage.
  Word encode_word(const Word& w) const;

  int alphabet_size() const override { return static_cast<int>(b_words_.size()); }
  std::string symbol_name(Symbol s) const override;
  std::string render_word(const Word& w) const override { return w.render('-'); }
  bool contains(const Word& w) const override;

 protected:
  std::vector<Word> compute_factors(int m) const override;

 private:
  RecodedSystem(OraclePtr base, int n0, std::vector<Word> b_words);

  Symbol b_index(const Word& xword) const;

  OraclePtr base_;
  int n0_;
  std::vector<Word> b_words_;
};

}  // namespace tfg

#endif
