#include "tfg/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tfg/error.hpp"

namespace tfg {

namespace {

void ensure_aperiodic(const OraclePtr& sys) {
  if (!sys->aperiodicity_checked()) {
    throw Error(Errc::AperiodicityUnchecked,
                "group elements need a system whose aperiodicity attribute is set");
  }
}

void ensure_dagger(const OraclePtr& sys) {
  if (!sys->satisfies_dagger()) {
    throw Error(Errc::DaggerRequired, "operation needs a system satisfying the dagger condition");
  }
}

}  // namespace

GroupElement GroupElement::identity(OraclePtr sys) {
  ensure_aperiodic(sys);
  std::map<Word, int> shifts;
  for (const Word& z : sys->factors(2)) shifts[z] = 0;
  return GroupElement(std::move(sys), 1, std::move(shifts));
}

GroupElement GroupElement::shift(OraclePtr sys) {
  ensure_aperiodic(sys);
  std::map<Word, int> shifts;
  for (const Word& z : sys->factors(2)) shifts[z] = 1;
  return GroupElement(std::move(sys), 1, std::move(shifts));
}

int GroupElement::max_abs_shift() const {
  int m = 0;
  for (const auto& [z, f] : shifts_) m = std::max(m, std::abs(f));
  return m;
}

GroupElement GroupElement::refined(int radius) const {
  if (radius == radius_) return *this;
  assert(radius > radius_);
  std::map<Word, int> shifts;
  for (const Word& z : sys_->factors(2 * radius)) {
    shifts[z] = shifts_.at(z.sub(radius - radius_, 2 * radius_));
  }
  return GroupElement(sys_, radius, std::move(shifts));
}

GroupElement GroupElement::reduced() const {
  GroupElement cur = *this;
  while (cur.radius_ > 1) {
    const int m = cur.radius_ - 1;
    std::map<Word, int> shrunk;
    bool reducible = true;
    for (const auto& [z, f] : cur.shifts_) {
      auto [it, fresh] = shrunk.emplace(z.sub(1, 2 * m), f);
      if (!fresh && it->second != f) {
        reducible = false;
        break;
      }
    }
    if (!reducible) break;
    cur = GroupElement(sys_, m, std::move(shrunk));
  }
  return cur;
}

int GroupElement::shift_at(const Word& window) const {
  const int r = window.size() / 2;
  assert(window.size() == 2 * r && r >= radius_);
  return shifts_.at(window.sub(r - radius_, 2 * radius_));
}

GroupElement GroupElement::inverse() const {
  // S^-1 exists iff every point has exactly one (window, shift) producing it;
  // scanning candidate shifts doubles as the bijectivity certificate.
  const int max = max_abs_shift();
  const int r = radius_ + max;
  std::map<Word, int> inv;
  for (const Word& y : sys_->factors(2 * r)) {
    int found = 0;
    int shift = 0;
    for (int s = -max; s <= max; ++s) {
      const Word candidate = y.sub(r - radius_ - s, 2 * radius_);
      if (shifts_.at(candidate) == s) {
        ++found;
        shift = s;
      }
    }
    if (found != 1) {
      throw Error(Errc::NotBijective, "cocycle does not induce a bijection");
    }
    inv[y] = -shift;
  }
  return GroupElement(sys_, r, std::move(inv)).reduced();
}

GroupElement GroupElement::from_cocycle(const std::vector<std::pair<ClopenSet, int>>& pieces) {
  if (pieces.empty()) throw Error(Errc::NotAPartition, "no pieces");
  OraclePtr sys = pieces.front().first.system();
  ensure_aperiodic(sys);

  int radius = 1;
  for (const auto& [set, shift] : pieces) radius = std::max(radius, set.radius());

  std::map<Word, int> shifts;
  std::vector<ClopenSet> refined;
  refined.reserve(pieces.size());
  for (const auto& [set, shift] : pieces) refined.push_back(set.refined(radius));

  for (const Word& z : sys->factors(2 * radius)) {
    int covered = 0;
    int value = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (refined[i].members().count(z)) {
        ++covered;
        value = pieces[i].second;
      }
    }
    if (covered != 1) {
      throw Error(Errc::NotAPartition, "pieces do not partition the space");
    }
    shifts[z] = value;
  }

  GroupElement g(std::move(sys), radius, std::move(shifts));
  g.inverse();  // throws NotBijective when the induced map is not invertible
  return g.reduced();
}

ClopenSet GroupElement::support() const {
  std::set<Word> nz;
  for (const auto& [z, f] : shifts_) {
    if (f != 0) nz.insert(z);
  }
  return ClopenSet::from_members(sys_, radius_, std::move(nz)).reduced();
}

bool GroupElement::is_identity() const {
  ensure_aperiodic(sys_);
  for (const auto& [z, f] : shifts_) {
    if (f != 0) return false;
  }
  return true;
}

bool GroupElement::equals(const GroupElement& rhs) const {
  assert(sys_ == rhs.sys_);
  const int r = std::max(radius_, rhs.radius_);
  return refined(r).shifts_ == rhs.refined(r).shifts_;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  assert(g.system() == h.system());
  const OraclePtr& sys = g.system();
  const int mg = g.radius();
  const int mh = h.radius();
  const int max_h = h.max_abs_shift();
  const int r = mg + mh + max_h;

  std::map<Word, int> shifts;
  for (const Word& z : sys->factors(2 * r)) {
    const int fh = h.cocycle().at(z.sub(r - mh, 2 * mh));
    const int fg = g.cocycle().at(z.sub(r - mg + fh, 2 * mg));
    shifts[z] = fg + fh;
  }
  return GroupElement(sys, r, std::move(shifts)).reduced();
}

GroupElement sigma(const ClopenSet& u) {
  const OraclePtr& sys = u.system();
  ensure_aperiodic(sys);
  if (u.is_empty()) return GroupElement::identity(sys);

  ClopenSet u1 = u.shifted(1);
  ClopenSet u2 = u.shifted(2);
  if (!u.disjoint_from(u1) || !u.disjoint_from(u2) || !u1.disjoint_from(u2)) {
    throw Error(Errc::OverlapViolation, "sigma needs U, TU, T^2U pairwise disjoint");
  }

  const int r = std::max({u.radius(), u1.radius(), u2.radius()});
  ClopenSet a = u.refined(r), b = u1.refined(r), c = u2.refined(r);
  std::map<Word, int> shifts;
  for (const Word& z : sys->factors(2 * r)) {
    if (a.members().count(z) || b.members().count(z)) {
      shifts[z] = 1;
    } else if (c.members().count(z)) {
      shifts[z] = -2;
    } else {
      shifts[z] = 0;
    }
  }
  return GroupElement(sys, r, std::move(shifts)).reduced();
}

GroupElement sigma(const OraclePtr& sys, const Cylinder& c) {
  if (!sys->contains(c.word)) return GroupElement::identity(sys);  // sigma of the empty set
  return sigma(to_clopen(sys, c).reduced());
}

GroupElement star(const GroupElement& r, const GroupElement& s) {
  return compose(s, compose(r.inverse(), compose(s.inverse(), r)));
}

std::string GeneratorSymbol::token() const {
  std::string out = "s[(" + cyl.word.render('-') + ")," + std::to_string(cyl.offset) + "]";
  if (exponent == -1) out += "^-1";
  return out;
}

GeneratorSymbol GeneratorSymbol::parse_token(const std::string& token) {
  auto fail = [&]() -> GeneratorSymbol {
    throw std::invalid_argument("bad generator token: " + token);
  };
  if (token.size() < 8 || token.compare(0, 3, "s[(") != 0) return fail();
  size_t close = token.find(')', 3);
  if (close == std::string::npos) return fail();
  Word w;
  {
    std::string body = token.substr(3, close - 3);
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, '-')) {
      if (part.empty()) return fail();
      w.append(std::stoi(part));
    }
    if (w.empty()) return fail();
  }
  if (close + 1 >= token.size() || token[close + 1] != ',') return fail();
  size_t bracket = token.find(']', close + 2);
  if (bracket == std::string::npos) return fail();
  int offset = std::stoi(token.substr(close + 2, bracket - close - 2));
  int exponent = 1;
  if (bracket + 1 < token.size()) {
    if (token.substr(bracket + 1) != "^-1") return fail();
    exponent = -1;
  }
  return GeneratorSymbol{{std::move(w), offset}, exponent};
}

std::vector<GeneratorSymbol> parse_generator_word(const std::string& text) {
  std::vector<GeneratorSymbol> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(GeneratorSymbol::parse_token(token));
  return out;
}

std::string render_generator_word(const std::vector<GeneratorSymbol>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i].token();
  }
  return out;
}

GroupElement evaluate_word(const OraclePtr& sys, const std::vector<GeneratorSymbol>& word) {
  std::map<Cylinder, GroupElement> cache;
  GroupElement acc = GroupElement::identity(sys);
  for (const GeneratorSymbol& sym : word) {
    auto it = cache.find(sym.cyl);
    if (it == cache.end()) it = cache.emplace(sym.cyl, sigma(sys, sym.cyl)).first;
    acc = compose(acc, sym.exponent == 1 ? it->second : it->second.inverse());
  }
  return acc;
}

bool membership_via_identity(const OraclePtr& sys, const Word& w) {
  ensure_dagger(sys);
  const int n = w.size();
  if (n < 4) throw Error(Errc::TooShort, "membership_via_identity needs |w| >= 4");
  for (Symbol s : w) {
    if (s < 0 || s >= sys->alphabet_size()) return false;
  }
  GroupElement expr = sigma(sys, Cylinder{w.sub(n - 3, 3), 1});
  for (int i = n - 4; i >= 0; --i) {
    expr = star(sigma(sys, Cylinder{w.sub(i, 2), 0}), expr);
  }
  return !expr.is_identity();
}

RelationReport check_relation_schema(const OraclePtr& sys, int max_word_len,
                                     int offset_min, int offset_max) {
  ensure_dagger(sys);
  RelationReport report;
  auto record = [&report](bool ok, const std::string& label) {
    ++report.checked;
    if (!ok) report.failures.push_back(label);
  };

  struct Entry {
    Cylinder cyl;
    ClopenSet dilated;
  };
  std::vector<Entry> entries;

  for (int m = 1; m <= max_word_len; ++m) {
    for (const Word& w : sys->factors(m)) {
      const int lo = std::max(1, offset_min);
      const int hi = std::min(m - 1, offset_max);
      for (int i = lo; i <= hi; ++i) {
        Cylinder cyl{w, i};
        GroupElement s = sigma(sys, cyl);

        // order three
        record(compose(s, compose(s, s)).is_identity(), "order3 " + cyl.render());

        // braid square and star shift once the three consecutive cylinders
        // are verified pairwise disjoint (always true under dagger)
        Cylinder cyl1{w, i + 1}, cyl2{w, i + 2};
        ClopenSet a = to_clopen(sys, cyl).reduced();
        ClopenSet b = to_clopen(sys, cyl1).reduced();
        ClopenSet c = to_clopen(sys, cyl2).reduced();
        if (a.disjoint_from(b) && a.disjoint_from(c) && b.disjoint_from(c)) {
          GroupElement s1 = sigma(sys, cyl1);
          GroupElement s2 = sigma(sys, cyl2);
          GroupElement braid = compose(s, s1);
          record(compose(braid, braid).is_identity(), "braid " + cyl.render());
          record(star(s, s2).equals(s1), "starshift " + cyl.render());
        }

        // partition relations from the canonical one-symbol refinements
        for (bool left : {true, false}) {
          auto parts = left ? left_refinement(sys, cyl) : right_refinement(sys, cyl);
          GroupElement prod = GroupElement::identity(sys);
          for (const Cylinder& p : parts) prod = compose(prod, sigma(sys, p));
          record(prod.equals(s),
                 std::string(left ? "partition-left " : "partition-right ") + cyl.render());
        }

        entries.push_back({cyl, a.unite(a.shifted(1)).unite(a.shifted(2))});
      }
    }
  }

  // commutation across all 3-disjoint pairs in range
  for (size_t a = 0; a < entries.size(); ++a) {
    for (size_t b = a + 1; b < entries.size(); ++b) {
      if (!entries[a].dilated.disjoint_from(entries[b].dilated)) continue;
      GroupElement g = sigma(sys, entries[a].cyl);
      GroupElement h = sigma(sys, entries[b].cyl);
      record(compose(g, h).equals(compose(h, g)),
             "commute " + entries[a].cyl.render() + " " + entries[b].cyl.render());
    }
  }
  return report;
}

}  // namespace tfg
