#include "tfg/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tfg/error.hpp"
#include "tfg/recoder.hpp"

namespace tfg {

FreeWord free_reduce(FreeWord w) {
  FreeWord out;
  for (const FreeLetter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord inverse_free(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

FreeWord star_free(const FreeWord& r, const FreeWord& s) {
  FreeWord out = s;
  FreeWord ri = inverse_free(r);
  FreeWord si = inverse_free(s);
  out.insert(out.end(), ri.begin(), ri.end());
  out.insert(out.end(), si.begin(), si.end());
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

namespace {

class Expander {
 public:
  explicit Expander(OraclePtr sys) : sys_(std::move(sys)), gens_(sys_->factors(3)) {
    if (!sys_->satisfies_dagger()) {
      throw Error(Errc::DaggerRequired, "Tietze expansion needs the dagger condition");
    }
  }

  const std::vector<Word>& gens() const { return gens_; }

  int gen_index(const Word& w3) const {
    auto it = std::lower_bound(gens_.begin(), gens_.end(), w3);
    if (it == gens_.end() || *it != w3) return -1;
    return static_cast<int>(it - gens_.begin());
  }

  // x_{[.bc]} = prod_a x_{(abc,1)}
  FreeWord left_pair(Symbol b, Symbol c) const {
    FreeWord out;
    for (const Word& g : gens_) {
      if (g[1] == b && g[2] == c) out.push_back({gen_index(g), 1});
    }
    return out;
  }

  // x_{[a.]} = prod_{b,c} x_{(abc,1)}
  FreeWord right_sym(Symbol a) const {
    FreeWord out;
    for (const Word& g : gens_) {
      if (g[0] == a) out.push_back({gen_index(g), 1});
    }
    return out;
  }

  FreeWord expand(const Word& w, int k) {
    if (w.size() < 3) throw Error(Errc::TooShort, "Tietze expansion needs |w| >= 3");
    if (k < 1 || k > w.size() - 1) {
      throw Error(Errc::UnsupportedOffset,
                  "offset " + std::to_string(k) + " outside 1..|w|-1 for |w|=" +
                      std::to_string(w.size()));
    }
    auto key = std::make_pair(w, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    FreeWord out;
    if (w.size() == 3) {
      if (k == 1) {
        int g = gen_index(w);
        if (g >= 0) out.push_back({g, 1});  // empty when w is not admissible
      } else {
        // (w,2) through its right refinement: pieces (wb,2) expand directly
        for (Symbol b = 0; b < sys_->alphabet_size(); ++b) {
          Word ext = w + Word::single(b);
          if (!sys_->contains(ext)) continue;
          FreeWord piece = expand(ext, 2);
          out.insert(out.end(), piece.begin(), piece.end());
        }
      }
    } else {
      out = convolution(w);
      for (int t = 2; t <= k; ++t) {
        out = star_free(out, right_sym(w[t]));
      }
    }
    out = free_reduce(std::move(out));
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  // x_{(w,1)} as the nested star convolution over the leading pairs
  FreeWord convolution(const Word& w) {
    const int n = w.size();
    FreeWord acc = expand(w.sub(n - 3, 3), 1);
    for (int i = n - 4; i >= 0; --i) {
      acc = star_free(left_pair(w[i], w[i + 1]), acc);
    }
    return acc;
  }

  OraclePtr sys_;
  std::vector<Word> gens_;
  std::map<std::pair<Word, int>, FreeWord> memo_;
};

}  // namespace

FreeWord tietze_expand(const OraclePtr& sys, const Word& w, int k) {
  Expander e(sys);
  return e.expand(w, k);
}

Presentation enumerate_relators(const OraclePtr& sys, const PresentationBounds& bounds) {
  Expander expander(sys);
  Presentation p{sys, bounds, expander.gens(), {}};

  auto expand_cyl = [&expander](const Cylinder& c) { return expander.expand(c.word, c.offset); };

  // collect the in-bounds cylinders with their 3-dilations for the R5 sweep
  struct Entry {
    Cylinder cyl;
    ClopenSet dilated;
  };
  std::vector<Entry> entries;

  for (int m = 3; m <= bounds.max_word_len; ++m) {
    for (const Word& w : sys->factors(m)) {
      const int lo = std::max(1, bounds.offset_min);
      const int hi = std::min(m - 1, bounds.offset_max);
      for (int i = lo; i <= hi; ++i) {
        Cylinder cyl{w, i};
        const std::string at = "(" + w.render('-') + "," + std::to_string(i) + ")";
        FreeWord e = expand_cyl(cyl);

        // R1: order three
        FreeWord r1 = e;
        r1.insert(r1.end(), e.begin(), e.end());
        r1.insert(r1.end(), e.begin(), e.end());
        p.relators.push_back({"R1", "R1 " + at, free_reduce(std::move(r1))});

        // R2/R3 only when the three consecutive offsets stay inside the
        // generator schema; disjointness is verified, not assumed
        if (i + 2 <= m - 1) {
          ClopenSet a = to_clopen(sys, cyl).reduced();
          ClopenSet b = to_clopen(sys, Cylinder{w, i + 1}).reduced();
          ClopenSet c = to_clopen(sys, Cylinder{w, i + 2}).reduced();
          if (a.disjoint_from(b) && a.disjoint_from(c) && b.disjoint_from(c)) {
            FreeWord e1 = expand_cyl({w, i + 1});
            FreeWord e2 = expand_cyl({w, i + 2});
            FreeWord r2 = e;
            r2.insert(r2.end(), e1.begin(), e1.end());
            FreeWord r2sq = r2;
            r2sq.insert(r2sq.end(), r2.begin(), r2.end());
            p.relators.push_back({"R2", "R2 " + at, free_reduce(std::move(r2sq))});

            FreeWord r3 = inverse_free(e1);
            FreeWord rhs = star_free(e, e2);
            r3.insert(r3.end(), rhs.begin(), rhs.end());
            p.relators.push_back({"R3", "R3 " + at, free_reduce(std::move(r3))});
          }
        }

        // R4: canonical one-symbol refinements iterated to the depth bound
        for (int d = 1; d <= bounds.depth; ++d) {
          for (bool left : {true, false}) {
            FreeWord r4 = inverse_free(e);
            bool any = false;
            for (const Word& x : sys->factors(d)) {
              Word piece_word = left ? x + w : w + x;
              if (!sys->contains(piece_word)) continue;
              any = true;
              FreeWord pe = expander.expand(piece_word, left ? i + d : i);
              r4.insert(r4.end(), pe.begin(), pe.end());
            }
            if (!any) continue;
            p.relators.push_back({"R4",
                                  std::string("R4 ") + (left ? "L" : "R") + std::to_string(d) +
                                      " " + at,
                                  free_reduce(std::move(r4))});
          }
        }

        ClopenSet u = to_clopen(sys, cyl).reduced();
        entries.push_back({cyl, u.unite(u.shifted(1)).unite(u.shifted(2))});
      }
    }
  }

  // R5: commutation of verified 3-disjoint pairs, attached to the earlier
  // cylinder of each pair
  std::vector<Relator> commutators;
  for (size_t a = 0; a < entries.size(); ++a) {
    for (size_t b = a + 1; b < entries.size(); ++b) {
      if (!entries[a].dilated.disjoint_from(entries[b].dilated)) continue;
      FreeWord ea = expand_cyl(entries[a].cyl);
      FreeWord eb = expand_cyl(entries[b].cyl);
      FreeWord r5 = inverse_free(ea);
      FreeWord ebi = inverse_free(eb);
      r5.insert(r5.end(), ebi.begin(), ebi.end());
      r5.insert(r5.end(), ea.begin(), ea.end());
      r5.insert(r5.end(), eb.begin(), eb.end());
      commutators.push_back(
          {"R5",
           "R5 (" + entries[a].cyl.word.render('-') + "," + std::to_string(entries[a].cyl.offset) +
               ")x(" + entries[b].cyl.word.render('-') + "," +
               std::to_string(entries[b].cyl.offset) + ")",
           free_reduce(std::move(r5))});
    }
  }
  p.relators.insert(p.relators.end(), commutators.begin(), commutators.end());
  return p;
}

GroupElement evaluate_free_word(const Presentation& p, const FreeWord& w) {
  std::map<int, std::pair<GroupElement, GroupElement>> cache;  // gen -> (sigma, inverse)
  GroupElement acc = GroupElement::identity(p.sys);
  for (const FreeLetter& l : w) {
    auto it = cache.find(l.gen);
    if (it == cache.end()) {
      GroupElement s = sigma(p.sys, Cylinder{p.generators[static_cast<size_t>(l.gen)], 1});
      GroupElement si = s.inverse();
      it = cache.emplace(l.gen, std::make_pair(std::move(s), std::move(si))).first;
    }
    acc = compose(acc, l.exp == 1 ? it->second.first : it->second.second);
  }
  return acc;
}

VerifyReport verify_relators(const Presentation& p) {
  VerifyReport report;
  std::vector<GroupElement> gens, invs;
  gens.reserve(p.generators.size());
  for (const Word& g : p.generators) {
    gens.push_back(sigma(p.sys, Cylinder{g, 1}));
    invs.push_back(gens.back().inverse());
  }
  for (const Relator& r : p.relators) {
    GroupElement acc = GroupElement::identity(p.sys);
    for (const FreeLetter& l : r.word) {
      acc = compose(acc, l.exp == 1 ? gens[static_cast<size_t>(l.gen)]
                                    : invs[static_cast<size_t>(l.gen)]);
    }
    ++report.checked;
    if (!acc.is_identity()) report.failures.push_back(r.label);
  }
  return report;
}

namespace {

using Perm = std::vector<int>;

Perm perm_identity(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// apply q first, then p
Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<size_t>(q[x])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[static_cast<size_t>(p[x])] = static_cast<int>(x);
  return r;
}

Perm three_cycle(int n, int i) {
  Perm p = perm_identity(n);
  p[static_cast<size_t>(i)] = i + 1;
  p[static_cast<size_t>(i + 1)] = i + 2;
  p[static_cast<size_t>(i + 2)] = i;
  return p;
}

}  // namespace

long long alt_group_order(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) gens.push_back(three_cycle(n, i));
  std::set<Perm> seen{perm_identity(n)};
  std::vector<Perm> frontier{perm_identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = perm_compose(p, g);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

bool alt_presentation_check(int n) {
  if (n < 5) throw std::invalid_argument("alt_presentation_check: n >= 5 required");
  std::vector<Perm> y;
  for (int i = 0; i + 2 < n; ++i) y.push_back(three_cycle(n, i));
  const Perm id = perm_identity(n);
  const int top = n - 3;  // generators y_0..y_{n-3}

  for (int i = 0; i <= top; ++i) {
    if (perm_compose(y[i], perm_compose(y[i], y[i])) != id) return false;
  }
  for (int i = 0; i + 1 <= top; ++i) {
    Perm p = perm_compose(y[i], y[i + 1]);
    if (perm_compose(p, p) != id) return false;
  }
  for (int i = 0; i <= top; ++i) {
    for (int j = 0; j <= top; ++j) {
      if (std::abs(i - j) <= 2) continue;
      if (perm_compose(y[i], y[j]) != perm_compose(y[j], y[i])) return false;
    }
  }
  for (int i = 0; i + 2 <= top; ++i) {
    // y_i * y_{i+2} = y_{i+2} y_i^-1 y_{i+2}^-1 y_i
    Perm st = perm_compose(y[i + 2],
                           perm_compose(perm_inverse(y[i]),
                                        perm_compose(perm_inverse(y[i + 2]), y[i])));
    if (st != y[i + 1]) return false;
  }

  long long half_factorial = 1;
  for (int i = 3; i <= n; ++i) half_factorial *= i;  // n!/2 = product 3..n
  return alt_group_order(n) == half_factorial;
}

std::string export_presentation(const Presentation& p, const std::string& system_label) {
  std::ostringstream out;
  int n0 = 0;
  if (auto rec = std::dynamic_pointer_cast<const RecodedSystem>(p.sys)) n0 = rec->n0();
  out << "# system=" << system_label << " n0=" << n0 << " W=" << p.bounds.max_word_len
      << " depth=" << p.bounds.depth << "\n";
  for (size_t k = 0; k < p.generators.size(); ++k) {
    out << "gen " << k << ": x[(" << p.generators[k].render('-') << "),1]\n";
  }
  for (const Relator& r : p.relators) {
    out << "rel " << r.tag << ":";
    for (const FreeLetter& l : r.word) {
      out << " s[(" << p.generators[static_cast<size_t>(l.gen)].render('-') << "),1]";
      if (l.exp == -1) out << "^-1";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tfg
