#include "tfg/word.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tfg {

Word Word::sub(int pos, int len) const {
  assert(pos >= 0 && len >= 0 && pos + len <= size());
  return Word(std::vector<Symbol>(syms_.begin() + pos, syms_.begin() + pos + len));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Symbol> out = syms_;
  out.insert(out.end(), rhs.syms_.begin(), rhs.syms_.end());
  return Word(std::move(out));
}

bool Word::is_prefix_of(const Word& w) const {
  if (size() > w.size()) return false;
  return std::equal(syms_.begin(), syms_.end(), w.syms_.begin());
}

bool Word::is_suffix_of(const Word& w) const {
  if (size() > w.size()) return false;
  return std::equal(syms_.rbegin(), syms_.rend(), w.syms_.rbegin());
}

std::vector<int> Word::occurrences(const Word& w) const {
  std::vector<int> out;
  if (w.empty() || w.size() > size()) return out;
  for (int p = 0; p + w.size() <= size(); ++p) {
    if (std::equal(w.syms_.begin(), w.syms_.end(), syms_.begin() + p)) out.push_back(p);
  }
  return out;
}

std::string Word::render(char sep) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(syms_[static_cast<size_t>(i)]);
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw std::invalid_argument("alphabet needs at least two symbols");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate symbol name: " + n);
  }
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  size_t pos = 0;
  while (pos < text.size()) {
    // greedy longest match so multi-character symbol names work
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) {
      throw std::invalid_argument("cannot parse word at \"" + std::string(text.substr(pos)) + "\"");
    }
    out.append(best);
    pos += best_len;
  }
  return out;
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (Symbol s : w) out += name(s);
  return out;
}

}  // namespace tfg
