#ifndef TFG_WORD_HPP
#define TFG_WORD_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfg {

using Symbol = std::int32_t;

/// A finite word over symbol indices.  Comparison is plain lexicographic,
/// which doubles as the canonical order for same-length factor sets.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> syms) : syms_(std::move(syms)) {}
  Word(std::initializer_list<Symbol> syms) : syms_(syms) {}

  static Word single(Symbol s) { return Word({s}); }

  int size() const { return static_cast<int>(syms_.size()); }
  bool empty() const { return syms_.empty(); }
  Symbol operator[](int i) const { return syms_[static_cast<size_t>(i)]; }
  const std::vector<Symbol>& symbols() const { return syms_; }

  void append(Symbol s) { syms_.push_back(s); }

  Word sub(int pos, int len) const;
  Word prefix(int len) const { return sub(0, len); }
  Word suffix(int len) const { return sub(size() - len, len); }

  Word operator+(const Word& rhs) const;
  bool is_prefix_of(const Word& w) const;
  bool is_suffix_of(const Word& w) const;

  /// Start positions of every occurrence of `w` in this word.
  std::vector<int> occurrences(const Word& w) const;

  auto operator<=>(const Word&) const = default;

  /// Symbol indices joined by `sep`, e.g. "0-2-3" or "0 2 3".
  std::string render(char sep = ' ') const;

  auto begin() const { return syms_.begin(); }
  auto end() const { return syms_.end(); }

 private:
  std::vector<Symbol> syms_;
};

/// Ordered set of named symbols; names are unique, size >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Symbol s) const { return names_[static_cast<size_t>(s)]; }
  std::optional<Symbol> index_of(std::string_view name) const;

  /// Parses a concatenation of symbol names (greedy longest match).
  Word parse(std::string_view text) const;
  std::string render(const Word& w) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace tfg

#endif
