#include "tfg/towers.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "tfg/error.hpp"

namespace tfg {

namespace {

// omega[-M..M-1], the window parity clopen sets use
Word point_window_for_radius(const OrbitPoint& p, int radius) {
  return p.window(radius).prefix(2 * radius);
}

}  // namespace

std::shared_ptr<const SubstitutionPoint> SubstitutionPoint::create(
    std::shared_ptr<const SubstitutionSystem> sys, SeedPoint seed) {
  const Substitution& sub = sys->substitution();
  const int n = sub.alphabet().size();
  if (seed.left < 0 || seed.left >= n || seed.right < 0 || seed.right >= n || seed.power < 1) {
    throw Error(Errc::InvalidSeed, "seed symbols or power out of range");
  }
  if (!sys->contains(Word{seed.left, seed.right})) {
    throw Error(Errc::InvalidSeed, "seed pair is not admissible");
  }
  Word right = sub.iterate(Word::single(seed.right), seed.power);
  Word left = sub.iterate(Word::single(seed.left), seed.power);
  if (right[0] != seed.right) {
    throw Error(Errc::InvalidSeed, "rules^p(a) must begin with a");
  }
  if (left[left.size() - 1] != seed.left) {
    throw Error(Errc::InvalidSeed, "rules^p(b) must end with b");
  }
  if (right.size() < 2 || left.size() < 2) {
    throw Error(Errc::InvalidSeed, "seed images must grow");
  }
  return std::shared_ptr<const SubstitutionPoint>(new SubstitutionPoint(std::move(sys), seed));
}

Word SubstitutionPoint::window(int n) const {
  const Substitution& sub = sys_->substitution();
  Word right = Word::single(seed_.right);
  Word left = Word::single(seed_.left);
  int guard = 0;
  while (right.size() < n + 1 || left.size() < n) {
    right = sub.iterate(right, seed_.power);
    left = sub.iterate(left, seed_.power);
    if (++guard > 64) throw Error(Errc::SearchCeilingExceeded, "seed images stopped growing");
  }
  return left.suffix(n) + right.prefix(n + 1);
}

std::string SubstitutionPoint::right_tail_id() const {
  return "subst:right=" + std::to_string(seed_.right) + ":power=" + std::to_string(seed_.power);
}

std::shared_ptr<const RecodedPoint> RecodedPoint::create(
    std::shared_ptr<const RecodedSystem> sys, std::shared_ptr<const OrbitPoint> base) {
  if (sys->base() != base->system()) {
    throw std::invalid_argument("point does not live on the recoded system's base");
  }
  return std::shared_ptr<const RecodedPoint>(new RecodedPoint(std::move(sys), std::move(base)));
}

Word RecodedPoint::window(int n) const {
  const int n0 = sys_->n0();
  const Word xwin = base_->window(n + n0 - 1);  // covers positions [-(n+n0-1), n+n0-1]
  Word out;
  for (int j = -n; j <= n; ++j) {
    out.append(sys_->encode_word(xwin.sub(j + n + n0 - 1, n0))[0]);
  }
  return out;
}

std::string RecodedPoint::right_tail_id() const {
  // the block map reads only omega[0,inf) to produce positions >= 0
  std::string base = base_->right_tail_id();
  if (base.empty()) return "";
  return "recoded:n0=" + std::to_string(sys_->n0()) + ":" + base;
}

int recurrence_bound(const LanguageOracle& sys, const Word& w, int ceiling) {
  if (!sys.contains(w)) throw Error(Errc::NotInLanguage, "recurrence_bound: word not in language");
  for (int l = w.size(); l <= ceiling; ++l) {
    bool everywhere = true;
    for (const Word& z : sys.factors(l)) {
      if (z.occurrences(w).empty()) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) return l;
  }
  throw Error(Errc::SearchCeilingExceeded, "recurrence_bound exceeded ceiling");
}

std::vector<Word> return_words(const LanguageOracle& sys, const Word& u, const Word& v) {
  const Word uv = u + v;
  if (!sys.contains(uv)) throw Error(Errc::NotInLanguage, "return_words: uv not in language");
  const int cap = u.size() + recurrence_bound(sys, uv) + v.size();

  std::set<Word> found;
  // depth-first right extension of uv; a branch ends the moment the second
  // occurrence of uv completes, which is exactly the cut defining the return word
  std::vector<Word> stack{uv};
  while (!stack.empty()) {
    Word s = std::move(stack.back());
    stack.pop_back();
    for (Symbol x = 0; x < sys.alphabet_size(); ++x) {
      Word ext = s + Word::single(x);
      if (!sys.contains(ext)) continue;
      auto occ = ext.occurrences(uv);
      if (occ.size() >= 2) {
        if (occ[1] + uv.size() == ext.size()) {
          found.insert(ext.sub(u.size(), occ[1]));
        }
        continue;  // prune: longer extensions carry extra occurrences
      }
      if (ext.size() >= cap) {
        throw Error(Errc::SearchCeilingExceeded, "return word search passed the recurrence bound");
      }
      stack.push_back(std::move(ext));
    }
  }
  return {found.begin(), found.end()};
}

Cylinder KRPartition::atom(int tower_index, int i) const {
  const Tower& t = towers[static_cast<size_t>(tower_index)];
  return Cylinder{t.base.word, t.base.offset + i};
}

int KRPartition::min_height() const {
  int h = towers.empty() ? 0 : towers.front().height;
  for (const Tower& t : towers) h = std::min(h, t.height);
  return h;
}

KRPartition kr_partition(const OrbitPoint& point, int n) {
  if (n < 1) throw std::invalid_argument("kr_partition: n >= 1 required");
  const OraclePtr& sys = point.system();
  const Word win = point.window(n);  // omega[-n..n]
  Word u = win.sub(0, n);
  Word v = win.sub(n, n + 1);

  KRPartition p;
  p.sys = sys;
  p.level = n;
  p.u = u;
  p.v = v;
  for (const Word& r : return_words(*sys, u, v)) {
    p.towers.push_back(Tower{r, Cylinder{u + r + v, n}, r.size()});
  }
  return p;
}

bool verify_kr(const KRPartition& p) {
  if (p.towers.empty()) return false;
  int radius = 1;
  for (size_t t = 0; t < p.towers.size(); ++t) {
    for (int i = 0; i < p.towers[t].height; ++i) {
      radius = std::max(radius, p.atom(static_cast<int>(t), i).min_radius());
    }
  }
  ++radius;

  // atoms partition the space
  std::vector<ClopenSet> atoms;
  for (size_t t = 0; t < p.towers.size(); ++t) {
    for (int i = 0; i < p.towers[t].height; ++i) {
      atoms.push_back(to_clopen(p.sys, p.atom(static_cast<int>(t), i), radius));
    }
  }
  for (const Word& z : p.sys->factors(2 * radius)) {
    int covered = 0;
    for (const ClopenSet& a : atoms) covered += a.members().count(z) ? 1 : 0;
    if (covered != 1) return false;
  }

  // tower tops are sent back onto the base union [u.v]
  ClopenSet base_union = to_clopen(p.sys, Cylinder{p.u + p.v, p.u.size()});
  ClopenSet tops_shifted = ClopenSet::empty(p.sys);
  for (size_t t = 0; t < p.towers.size(); ++t) {
    Cylinder top = p.atom(static_cast<int>(t), p.towers[t].height - 1);
    tops_shifted = tops_shifted.unite(to_clopen(p.sys, top).shifted(1));
  }
  return tops_shifted.same_set(base_union);
}

bool verify_kr_refinement(const KRPartition& fine, const KRPartition& coarse) {
  std::vector<ClopenSet> coarse_atoms;
  for (size_t t = 0; t < coarse.towers.size(); ++t) {
    for (int i = 0; i < coarse.towers[t].height; ++i) {
      coarse_atoms.push_back(to_clopen(coarse.sys, coarse.atom(static_cast<int>(t), i)).reduced());
    }
  }
  for (size_t t = 0; t < fine.towers.size(); ++t) {
    for (int i = 0; i < fine.towers[t].height; ++i) {
      ClopenSet a = to_clopen(fine.sys, fine.atom(static_cast<int>(t), i)).reduced();
      int inside = 0;
      for (const ClopenSet& c : coarse_atoms) inside += a.subset_of(c) ? 1 : 0;
      if (inside != 1) return false;
    }
  }

  ClopenSet fine_base = to_clopen(fine.sys, Cylinder{fine.u + fine.v, fine.u.size()});
  ClopenSet coarse_base = to_clopen(coarse.sys, Cylinder{coarse.u + coarse.v, coarse.u.size()});
  return fine_base.subset_of(coarse_base);
}

int count_block_decompositions(const Word& r, const std::vector<Word>& blocks) {
  std::vector<int> ways(static_cast<size_t>(r.size()) + 1, 0);
  ways[0] = 1;
  for (int pos = 0; pos < r.size(); ++pos) {
    if (!ways[static_cast<size_t>(pos)]) continue;
    for (const Word& b : blocks) {
      if (pos + b.size() <= r.size() && r.sub(pos, b.size()) == b) {
        ways[static_cast<size_t>(pos + b.size())] += ways[static_cast<size_t>(pos)];
      }
    }
  }
  return ways[static_cast<size_t>(r.size())];
}

std::vector<GroupElement> tower_3cycles(const KRPartition& p) {
  if (p.min_height() < 3) {
    throw Error(Errc::TowerTooShort, "tower 3-cycles need every height >= 3");
  }
  std::vector<GroupElement> out;
  for (size_t t = 0; t < p.towers.size(); ++t) {
    for (int i = 0; i + 3 <= p.towers[t].height; ++i) {
      out.push_back(sigma(p.sys, p.atom(static_cast<int>(t), i)));
    }
  }
  return out;
}

bool level_embedding_check(const OrbitPoint& point, int n) {
  const OraclePtr& sys = point.system();
  KRPartition lo = kr_partition(point, n);
  KRPartition hi = kr_partition(point, n + 1);
  if (lo.min_height() < 3 || hi.min_height() < 3) {
    throw Error(Errc::TowerTooShort, "level embedding needs heights >= 3 at both levels");
  }

  for (size_t t = 0; t < lo.towers.size(); ++t) {
    for (int i = 0; i + 3 <= lo.towers[t].height; ++i) {
      Cylinder coarse = lo.atom(static_cast<int>(t), i);
      ClopenSet coarse_set = to_clopen(sys, coarse).reduced();
      GroupElement lhs = sigma(sys, coarse);
      GroupElement rhs = GroupElement::identity(sys);
      for (size_t s = 0; s < hi.towers.size(); ++s) {
        for (int j = 0; j + 3 <= hi.towers[s].height; ++j) {
          Cylinder atom = hi.atom(static_cast<int>(s), j);
          if (to_clopen(sys, atom).reduced().subset_of(coarse_set)) {
            rhs = compose(rhs, sigma(sys, atom));
          }
        }
      }
      if (!lhs.equals(rhs)) return false;
    }
  }
  return true;
}

bool orbits_separated_to_depth(const OrbitPoint& p1, const OrbitPoint& p2, int depth) {
  const std::string tail = p1.right_tail_id();
  if (!tail.empty() && tail == p2.right_tail_id() && p1.system()->aperiodicity_checked()) {
    // equal right half-lines: omega2 = T^s omega1 with s != 0 would make the
    // half-line periodic, so any pointwise difference separates the orbits
    return p1.window(depth) != p2.window(depth);
  }
  const Word w1 = p1.window(2 * depth);  // covers every shifted comparison below
  const Word w2 = p2.window(depth);
  for (int s = -depth; s <= depth; ++s) {
    // T^s omega1 restricted to [-depth, depth] against omega2
    if (w1.sub(depth + s, 2 * depth + 1) == w2) return false;
  }
  return true;
}

Factorization factor_product(const std::vector<GeneratorSymbol>& word,
                             const OrbitPoint& omega, const OrbitPoint& omega_prime,
                             int level_ceiling, int orbit_check_depth) {
  const OraclePtr& sys = omega.system();
  if (!sys->satisfies_dagger()) {
    throw Error(Errc::DaggerRequired, "factor_product runs on dagger systems");
  }
  if (omega_prime.system() != sys) {
    throw std::invalid_argument("factor_product: points live on different systems");
  }
  if (!orbits_separated_to_depth(omega, omega_prime, orbit_check_depth)) {
    throw Error(Errc::SeedOrbitNotSeparated, "points look orbit-equivalent to the checked depth");
  }

  // sigma^-1 = sigma^2, so inverse symbols unfold into two positive ones;
  // empty cylinders contribute nothing
  std::vector<Cylinder> factors;
  for (const GeneratorSymbol& sym : word) {
    if (!sys->contains(sym.cyl.word)) continue;
    factors.push_back(sym.cyl);
    if (sym.exponent == -1) factors.push_back(sym.cyl);
  }
  const int k = static_cast<int>(factors.size());
  if (k == 0) {
    return Factorization{1, {}, {}, ClopenSet::empty(sys)};
  }

  std::vector<ClopenSet> target_sets;
  target_sets.reserve(factors.size());
  for (const Cylinder& c : factors) target_sets.push_back(to_clopen(sys, c).reduced());

  // inside-or-disjoint, textual where the ranges nest, exact sets otherwise
  auto resolves = [&](const Cylinder& part, const ClopenSet& target_set,
                      const Cylinder& target) -> std::pair<bool, bool> {
    switch (quick_cylinder_relation(part, target)) {
      case CylinderRelation::Subset: return {true, true};
      case CylinderRelation::Disjoint: return {true, false};
      case CylinderRelation::Undecided: break;
    }
    ClopenSet s = to_clopen(sys, part).reduced();
    if (s.subset_of(target_set)) return {true, true};
    if (s.disjoint_from(target_set)) return {true, false};
    return {false, false};
  };

  for (int n = 1; n <= level_ceiling; ++n) {
    KRPartition p = kr_partition(omega, n);
    const Cylinder base{p.u + p.v, n};
    const ClopenSet base_set = to_clopen(sys, base).reduced();

    // (i) the boundary slices T^i[u.v], -3k <= i <= 3k+2, are disjoint
    bool ok = true;
    for (int d = 1; d <= 6 * k + 2 && ok; ++d) {
      if (!base_set.disjoint_from(base_set.shifted(d))) ok = false;
    }
    if (!ok) continue;

    // (iii) boundary slices do not straddle any factor's cylinder
    for (int i = -3 * k; i <= 3 * k && ok; ++i) {
      Cylinder slice{base.word, base.offset + i};
      for (size_t m = 0; m < factors.size(); ++m) {
        auto [decided, inside] = resolves(slice, target_sets[m], factors[m]);
        (void)inside;
        if (!decided) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // omega' must stay clear of the boundary set B
    ClopenSet boundary = ClopenSet::empty(sys);
    for (int i = -3 * k; i <= 3 * k + 2; ++i) boundary = boundary.unite(base_set.shifted(i));
    if (boundary.contains_window(point_window_for_radius(omega_prime, boundary.radius()))) {
      continue;
    }

    // (ii) every atom is inside or disjoint from every factor's cylinder;
    // collect the split into interior (P_m) and boundary (Q_m) parts as we go
    std::vector<GeneratorSymbol> p_word, q_word;
    for (int m = 1; m <= k && ok; ++m) {
      const Cylinder& target = factors[static_cast<size_t>(m - 1)];
      const ClopenSet& target_set = target_sets[static_cast<size_t>(m - 1)];
      for (size_t t = 0; t < p.towers.size() && ok; ++t) {
        const int h = p.towers[t].height;
        for (int i = 0; i < h; ++i) {
          Cylinder atom = p.atom(static_cast<int>(t), i);
          auto [decided, inside] = resolves(atom, target_set, target);
          if (!decided) {
            ok = false;
            break;
          }
          if (!inside) continue;
          GeneratorSymbol sym{std::move(atom), 1};
          if (3 * m <= i && i <= h - 1 - 3 * m) {
            p_word.push_back(std::move(sym));
          } else {
            q_word.push_back(std::move(sym));
          }
        }
      }
    }
    if (!ok) continue;
    return Factorization{n, std::move(p_word), std::move(q_word), std::move(boundary)};
  }
  throw Error(Errc::SearchCeilingExceeded, "no level satisfied the factorization conditions");
}

}  // namespace tfg
