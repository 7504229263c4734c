#include "tfg/recoder.hpp"

#include <algorithm>

#include "tfg/error.hpp"

namespace tfg {

int find_n0(const LanguageOracle& oracle, int ceiling) {
  for (int n = 1; n <= ceiling; ++n) {
    bool clean = true;
    // (w,i) meets (w,0) for some i in 1..4 iff some word of L_{n+4} carries
    // the same length-n window at positions 0 and i
    for (const Word& z : oracle.factors(n + 4)) {
      for (int i = 1; i <= 4 && clean; ++i) {
        if (z.sub(0, n) == z.sub(i, n)) clean = false;
      }
      if (!clean) break;
    }
    if (clean) return n;
  }
  throw Error(Errc::SearchCeilingExceeded, "find_n0 exceeded ceiling " + std::to_string(ceiling));
}

RecodedSystem::RecodedSystem(OraclePtr base, int n0, std::vector<Word> b_words)
    : base_(std::move(base)), n0_(n0), b_words_(std::move(b_words)) {
  aperiodic_attr_ = base_->aperiodicity_checked();
}

std::shared_ptr<const RecodedSystem> RecodedSystem::create(OraclePtr base, int ceiling) {
  int n0 = find_n0(*base, ceiling);
  std::vector<Word> b_words = base->factors(n0);  // already sorted: canonical symbol order
  return std::shared_ptr<const RecodedSystem>(
      new RecodedSystem(std::move(base), n0, std::move(b_words)));
}

std::string RecodedSystem::symbol_name(Symbol s) const {
  return base_->render_word(b_words_[static_cast<size_t>(s)]);
}

Symbol RecodedSystem::b_index(const Word& xword) const {
  auto it = std::lower_bound(b_words_.begin(), b_words_.end(), xword);
  if (it == b_words_.end() || *it != xword) {
    throw Error(Errc::NotInLanguage, "block is not a B-symbol");
  }
  return static_cast<Symbol>(it - b_words_.begin());
}

Word RecodedSystem::decode_word(const Word& z) const {
  if (z.empty()) throw Error(Errc::TooShort, "decode_word needs at least one symbol");
  for (Symbol s : z) {
    if (s < 0 || s >= alphabet_size()) throw Error(Errc::NotInLanguage, "B-symbol out of range");
  }
  Word out = b_words_[static_cast<size_t>(z[0])];
  for (int j = 1; j < z.size(); ++j) {
    const Word& cur = b_words_[static_cast<size_t>(z[j])];
    const Word& prev = b_words_[static_cast<size_t>(z[j - 1])];
    if (prev.suffix(n0_ - 1) != cur.prefix(n0_ - 1)) {
      throw Error(Errc::NotInLanguage, "inconsistent symbol overlap while decoding");
    }
    out.append(cur[n0_ - 1]);
  }
  return out;
}

Word RecodedSystem::encode_word(const Word& w) const {
  if (w.size() < n0_) throw Error(Errc::TooShort, "encode_word needs |w| >= n0");
  if (!base_->contains(w)) throw Error(Errc::NotInLanguage, "word not in the base language");
  Word out;
  for (int j = 0; j + n0_ <= w.size(); ++j) out.append(b_index(w.sub(j, n0_)));
  return out;
}

bool RecodedSystem::contains(const Word& w) const {
  if (w.empty()) return false;
  for (Symbol s : w) {
    if (s < 0 || s >= alphabet_size()) return false;
  }
  try {
    return base_->contains(decode_word(w));
  } catch (const Error&) {
    return false;  // inconsistent overlaps
  }
}

std::vector<Word> RecodedSystem::compute_factors(int m) const {
  std::vector<Word> out;
  for (const Word& w : base_->factors(m + n0_ - 1)) {
    Word z;
    for (int j = 0; j + n0_ <= w.size(); ++j) z.append(b_index(w.sub(j, n0_)));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace tfg
