#include "tfg/language.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfg/error.hpp"

namespace tfg {

const std::vector<Word>& LanguageOracle::factors(int m) const {
  if (m < 1) throw std::invalid_argument("factors: m >= 1 required");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = factor_cache_.find(m);
  if (it != factor_cache_.end()) return it->second;
  std::vector<Word> f = compute_factors(m);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  // std::map nodes are stable, so the reference survives later insertions
  return factor_cache_.emplace(m, std::move(f)).first->second;
}

bool LanguageOracle::contains(const Word& w) const {
  if (w.empty()) throw std::invalid_argument("contains: |w| >= 1 required");
  const auto& f = factors(w.size());
  return std::binary_search(f.begin(), f.end(), w);
}

bool LanguageOracle::satisfies_dagger() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (dagger_cache_) return *dagger_cache_;
  }
  bool ok = true;
  for (const Word& w : factors(5)) {
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (w[i] == w[j]) { ok = false; break; }
    if (!ok) break;
  }
  std::lock_guard<std::mutex> lock(mu_);
  dagger_cache_ = ok;
  return ok;
}

std::set<Word> admissible_two_blocks(const Substitution& sub) {
  if (!is_primitive(sub)) throw Error(Errc::NotPrimitive, "two-block closure needs a primitive substitution");

  auto two_factors = [](const Word& w, std::set<Word>& into) {
    for (int i = 0; i + 2 <= w.size(); ++i) into.insert(w.sub(i, 2));
  };

  // seed: the first power of the rules under which every symbol shows up
  Word seed = Word::single(0);
  for (;;) {
    std::set<Symbol> present(seed.begin(), seed.end());
    if (static_cast<int>(present.size()) == sub.alphabet().size()) break;
    seed = sub.apply(seed);
  }
  std::set<Word> blocks;
  two_factors(seed, blocks);

  for (;;) {
    std::set<Word> next = blocks;
    for (const Word& b : blocks) {
      two_factors(sub.rule(b[0]) + sub.rule(b[1]), next);
    }
    if (next == blocks) return blocks;
    blocks = std::move(next);
  }
}

bool aperiodicity_check(const LanguageOracle& oracle, int depth) {
  if (depth < 1) throw std::invalid_argument("aperiodicity_check: depth >= 1 required");
  for (int n = 1; n <= depth; ++n) {
    if (static_cast<int>(oracle.factors(n).size()) < n + 1) return false;
  }
  return true;
}

std::shared_ptr<const SubstitutionSystem> SubstitutionSystem::create(Substitution sub,
                                                                     int aperiodicity_depth) {
  std::set<Word> blocks = admissible_two_blocks(sub);  // throws NotPrimitive
  auto sys = std::shared_ptr<SubstitutionSystem>(
      new SubstitutionSystem(std::move(sub), std::move(blocks)));
  sys->aperiodic_attr_ = aperiodicity_check(*sys, aperiodicity_depth);
  return sys;
}

std::vector<Word> SubstitutionSystem::compute_factors(int m) const {
  if (m == 2) return {two_blocks_.begin(), two_blocks_.end()};

  // smallest power t with every rule image of length >= m; then every
  // length-m window of the subshift sits inside rules^t of a two-block
  const int n = alphabet_size();
  std::vector<long long> len(static_cast<size_t>(n), 1);
  int t = 0;
  while (*std::min_element(len.begin(), len.end()) < m) {
    std::vector<long long> next(static_cast<size_t>(n), 0);
    for (Symbol s = 0; s < n; ++s) {
      for (Symbol x : sub_.rule(s)) next[static_cast<size_t>(s)] += len[static_cast<size_t>(x)];
    }
    len = std::move(next);
    ++t;
  }

  std::set<Word> out;
  for (const Word& b : two_blocks_) {
    Word expanded = sub_.iterate(b, t);
    for (int i = 0; i + m <= expanded.size(); ++i) out.insert(expanded.sub(i, m));
  }
  return {out.begin(), out.end()};
}

}  // namespace tfg
