// Test-only oracles, kept independent of the library's factor machinery:
// everything here works by scanning literal expansions rules^K(a0).

#ifndef TFG_TESTS_BRUTEFORCE_HPP
#define TFG_TESTS_BRUTEFORCE_HPP

#include <set>
#include <string>

#include "tfg/substitution.hpp"
#include "tfg/word.hpp"

namespace tfg::testing {

// Length-m subwords of rules^K(a0), with K grown until the set stabilizes
// between K and K+1.
inline std::set<Word> bf_factors(const Substitution& sub, int m) {
  Word w = Word::single(0);
  std::set<Word> prev;
  for (int k = 0; k < 64; ++k) {
    w = sub.apply(w);
    std::set<Word> cur;
    for (int i = 0; i + m <= w.size(); ++i) cur.insert(w.sub(i, m));
    if (!cur.empty() && cur == prev && w.size() > 4 * m) return cur;
    prev = std::move(cur);
  }
  return prev;
}

// Occurrence-gap scan: least n such that no word of bf-L_{n+4} carries its
// leading length-n window again at a position i in 1..4.
inline int bf_find_n0(const Substitution& sub, int ceiling = 32) {
  for (int n = 1; n <= ceiling; ++n) {
    bool clean = true;
    for (const Word& z : bf_factors(sub, n + 4)) {
      for (int i = 1; i <= 4 && clean; ++i) {
        if (z.sub(0, n) == z.sub(i, n)) clean = false;
      }
      if (!clean) break;
    }
    if (clean) return n;
  }
  return -1;
}

// Positional cylinder test inside a fixed centered window: word z of even
// length 2M read as omega[-M..M-1] lies in (w,i) iff w sits at index M-i.
inline bool bf_window_in_cylinder(const Word& z, const Word& w, int offset) {
  const int m = z.size() / 2;
  const int start = m - offset;
  if (start < 0 || start + w.size() > z.size()) return false;
  return z.sub(start, w.size()) == w;
}

}  // namespace tfg::testing

#endif
