#include "tfg/clopen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "tfg/error.hpp"

namespace tfg {

// Centered-word convention: a member z of length 2M reads omega[-M..M-1],
// so z[j] is omega_{j-M}.  The cylinder (w,i) pins omega_{t-i} = w_t, which
// lands at member index M-i+t.

int Cylinder::min_radius() const {
  return std::max({offset, word.size() - offset, 1});
}

std::string Cylinder::render() const {
  return "(" + word.render(' ') + ", " + std::to_string(offset) + ")";
}

ClopenSet ClopenSet::empty(OraclePtr sys, int radius) {
  return ClopenSet(std::move(sys), radius, {});
}

ClopenSet ClopenSet::whole(OraclePtr sys, int radius) {
  const auto& all = sys->factors(2 * radius);
  return ClopenSet(std::move(sys), radius, {all.begin(), all.end()});
}

ClopenSet ClopenSet::from_members(OraclePtr sys, int radius, std::set<Word> members) {
  if (radius < 1) throw Error(Errc::RadiusTooSmall, "clopen radius must be >= 1");
  for (const Word& z : members) {
    if (z.size() != 2 * radius || !sys->contains(z)) {
      throw std::invalid_argument("clopen member must be an admissible centered word");
    }
  }
  return ClopenSet(std::move(sys), radius, std::move(members));
}

ClopenSet ClopenSet::refined(int radius) const {
  if (radius == radius_) return *this;
  assert(radius > radius_);
  std::set<Word> out;
  for (const Word& z : sys_->factors(2 * radius)) {
    if (members_.count(z.sub(radius - radius_, 2 * radius_))) out.insert(z);
  }
  return ClopenSet(sys_, radius, std::move(out));
}

ClopenSet ClopenSet::reduced() const {
  ClopenSet cur = *this;
  while (cur.radius_ > 1) {
    const int m = cur.radius_ - 1;
    std::map<Word, std::pair<int, int>> fibers;  // central word -> (inside, total)
    for (const Word& z : sys_->factors(2 * cur.radius_)) {
      auto& f = fibers[z.sub(1, 2 * m)];
      ++f.second;
      if (cur.members_.count(z)) ++f.first;
    }
    bool reducible = true;
    std::set<Word> shrunk;
    for (const auto& [c, f] : fibers) {
      if (f.first == f.second) {
        shrunk.insert(c);
      } else if (f.first != 0) {
        reducible = false;
        break;
      }
    }
    if (!reducible) break;
    cur = ClopenSet(sys_, m, std::move(shrunk));
  }
  return cur;
}

ClopenSet ClopenSet::shifted(int k) const {
  if (k == 0) return *this;
  const int r = radius_ + std::abs(k);
  std::set<Word> out;
  for (const Word& z : sys_->factors(2 * r)) {
    // omega' = T^k omega: the preimage window sits k places to the right
    if (members_.count(z.sub(r - radius_ - k, 2 * radius_))) out.insert(z);
  }
  return ClopenSet(sys_, r, std::move(out)).reduced();
}

static std::pair<ClopenSet, ClopenSet> at_common_radius(const ClopenSet& a, const ClopenSet& b) {
  const int r = std::max(a.radius(), b.radius());
  return {a.refined(r), b.refined(r)};
}

ClopenSet ClopenSet::unite(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  std::set<Word> out = a.members();
  out.insert(b.members().begin(), b.members().end());
  return ClopenSet(sys_, a.radius(), std::move(out));
}

ClopenSet ClopenSet::intersect(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  std::set<Word> out;
  for (const Word& z : a.members()) {
    if (b.members().count(z)) out.insert(z);
  }
  return ClopenSet(sys_, a.radius(), std::move(out));
}

ClopenSet ClopenSet::subtract(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  std::set<Word> out;
  for (const Word& z : a.members()) {
    if (!b.members().count(z)) out.insert(z);
  }
  return ClopenSet(sys_, a.radius(), std::move(out));
}

ClopenSet ClopenSet::complement() const {
  std::set<Word> out;
  for (const Word& z : sys_->factors(2 * radius_)) {
    if (!members_.count(z)) out.insert(z);
  }
  return ClopenSet(sys_, radius_, std::move(out));
}

bool ClopenSet::subset_of(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  return std::includes(b.members().begin(), b.members().end(),
                       a.members().begin(), a.members().end());
}

bool ClopenSet::disjoint_from(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  for (const Word& z : a.members()) {
    if (b.members().count(z)) return false;
  }
  return true;
}

bool ClopenSet::same_set(const ClopenSet& rhs) const {
  auto [a, b] = at_common_radius(*this, rhs);
  return a.members() == b.members();
}

bool ClopenSet::contains_window(const Word& window) const {
  const int r = window.size() / 2;
  assert(window.size() == 2 * r && r >= radius_);
  return members_.count(window.sub(r - radius_, 2 * radius_)) > 0;
}

ClopenSet to_clopen(OraclePtr sys, const Cylinder& c, int radius) {
  if (radius < c.min_radius()) {
    throw Error(Errc::RadiusTooSmall,
                "radius " + std::to_string(radius) + " cannot center " + c.render());
  }
  std::set<Word> out;
  for (const Word& z : sys->factors(2 * radius)) {
    if (z.sub(radius - c.offset, c.word.size()) == c.word) out.insert(z);
  }
  return ClopenSet::from_members(std::move(sys), radius, std::move(out));
}

ClopenSet to_clopen(OraclePtr sys, const Cylinder& c) {
  return to_clopen(std::move(sys), c, c.min_radius());
}

ClopenSet shift_clopen(const ClopenSet& s, int k) { return s.shifted(k); }

CylinderRelation quick_cylinder_relation(const Cylinder& inner, const Cylinder& outer) {
  // inner pins positions [-di, |wi|-1-di]; decide only when outer's range nests
  const int start = inner.offset - outer.offset;  // outer word start inside inner word
  if (start < 0 || start + outer.word.size() > inner.word.size()) {
    return CylinderRelation::Undecided;
  }
  return inner.word.sub(start, outer.word.size()) == outer.word ? CylinderRelation::Subset
                                                                : CylinderRelation::Disjoint;
}

bool is_subset(const OraclePtr& sys, const Cylinder& c1, const Cylinder& c2) {
  // (v,j) subset (w,i)  iff  (v,0) subset (w,i-j); +1 slack over the proof's bound
  Cylinder a{c1.word, c1.offset - c2.offset};
  Cylinder b{c2.word, 0};
  int radius = std::max(c1.word.size(), c2.word.size()) + std::abs(c1.offset - c2.offset) + 1;
  radius = std::max({radius, a.min_radius(), b.min_radius()});
  return to_clopen(sys, a, radius).subset_of(to_clopen(sys, b, radius));
}

static ClopenSet three_dilation(const ClopenSet& u) {
  return u.unite(u.shifted(1)).unite(u.shifted(2));
}

bool are_3disjoint(const ClopenSet& u, const ClopenSet& v) {
  return three_dilation(u).disjoint_from(three_dilation(v));
}

bool are_3disjoint(const OraclePtr& sys, const Cylinder& c1, const Cylinder& c2) {
  return are_3disjoint(to_clopen(sys, c1).reduced(), to_clopen(sys, c2).reduced());
}

bool verify_cylinder_partition(const OraclePtr& sys, const Cylinder& target,
                               const std::vector<Cylinder>& parts) {
  // the proof's bound: max over parts of (|v|+|j|) + |w| + |i| + 1
  int radius = std::max(target.word.size() + std::abs(target.offset) + 1, target.min_radius());
  for (const Cylinder& p : parts) {
    radius = std::max(radius, p.word.size() + std::abs(p.offset) +
                                  target.word.size() + std::abs(target.offset) + 1);
    radius = std::max(radius, p.min_radius());
  }

  ClopenSet t = to_clopen(sys, target, radius);
  std::vector<ClopenSet> ps;
  ps.reserve(parts.size());
  for (const Cylinder& p : parts) ps.push_back(to_clopen(sys, p, radius));

  for (const ClopenSet& p : ps) {
    if (!p.subset_of(t)) return false;
  }
  for (const Word& z : t.members()) {
    int covered = 0;
    for (const ClopenSet& p : ps) covered += p.members().count(z) ? 1 : 0;
    if (covered != 1) return false;
  }
  return true;
}

std::vector<Cylinder> left_refinement(const OraclePtr& sys, const Cylinder& c) {
  if (!sys->contains(c.word)) throw Error(Errc::NotInLanguage, "cannot refine " + c.render());
  std::vector<Cylinder> out;
  for (Symbol a = 0; a < sys->alphabet_size(); ++a) {
    Word ext = Word::single(a) + c.word;
    if (sys->contains(ext)) out.push_back({std::move(ext), c.offset + 1});
  }
  return out;
}

std::vector<Cylinder> right_refinement(const OraclePtr& sys, const Cylinder& c) {
  if (!sys->contains(c.word)) throw Error(Errc::NotInLanguage, "cannot refine " + c.render());
  std::vector<Cylinder> out;
  for (Symbol b = 0; b < sys->alphabet_size(); ++b) {
    Word ext = c.word + Word::single(b);
    if (sys->contains(ext)) out.push_back({std::move(ext), c.offset});
  }
  return out;
}

}  // namespace tfg
