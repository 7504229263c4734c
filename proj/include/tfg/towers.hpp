#ifndef TFG_TOWERS_HPP
#define TFG_TOWERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/group.hpp"
#include "tfg/language.hpp"
#include "tfg/recoder.hpp"
#include "tfg/word.hpp"

namespace tfg {

/// Seed for a substitution-fixed two-sided point: symbols (b, a) with ba
/// admissible and a power p with rules^p(a) starting in a and rules^p(b)
/// ending in b.  The point is ... rules^{kp}(b) . rules^{kp}(a) ...
struct SeedPoint {
  Symbol left = 0;
  Symbol right = 0;
  int power = 1;
};

/// A computable point of the subshift: arbitrary-radius centered windows.
class OrbitPoint {
 public:
  virtual ~OrbitPoint() = default;
  virtual const OraclePtr& system() const = 0;
  /// omega[-n..n], length 2n+1.
  virtual Word window(int n) const = 0;
  /// Identifier of the construction of omega[0,inf); two points with the
  /// same nonempty id have equal right half-lines.  Empty when unknown.
  virtual std::string right_tail_id() const { return ""; }
};

class SubstitutionPoint final : public OrbitPoint {
 public:
  /// Throws InvalidSeed.
  static std::shared_ptr<const SubstitutionPoint> create(
      std::shared_ptr<const SubstitutionSystem> sys, SeedPoint seed);

  const OraclePtr& system() const override { return sys_as_oracle_; }
  Word window(int n) const override;
  std::string right_tail_id() const override;
  const SeedPoint& seed() const { return seed_; }

 private:
  SubstitutionPoint(std::shared_ptr<const SubstitutionSystem> sys, SeedPoint seed)
      : sys_(std::move(sys)), sys_as_oracle_(sys_), seed_(seed) {}

  std::shared_ptr<const SubstitutionSystem> sys_;
  OraclePtr sys_as_oracle_;
  SeedPoint seed_;
};

/// Image of a base point under the recoding block map.
class RecodedPoint final : public OrbitPoint {
 public:
  static std::shared_ptr<const RecodedPoint> create(
      std::shared_ptr<const RecodedSystem> sys, std::shared_ptr<const OrbitPoint> base);

  const OraclePtr& system() const override { return sys_as_oracle_; }
  Word window(int n) const override;
  std::string right_tail_id() const override;

 private:
  RecodedPoint(std::shared_ptr<const RecodedSystem> sys, std::shared_ptr<const OrbitPoint> base)
      : sys_(std::move(sys)), sys_as_oracle_(sys_), base_(std::move(base)) {}

  std::shared_ptr<const RecodedSystem> sys_;
  OraclePtr sys_as_oracle_;
  std::shared_ptr<const OrbitPoint> base_;
};

/// Least l such that every word of L_l contains w.  Bounded-gap recurrence is
/// what makes return-word searches terminate.
int recurrence_bound(const LanguageOracle& sys, const Word& w, int ceiling = 512);

/// Return words to u.v: all w with uwv admissible, v a prefix of wv, u a
/// suffix of uw, and exactly two occurrences of uv in uwv.  Sorted.
std::vector<Word> return_words(const LanguageOracle& sys, const Word& u, const Word& v);

struct Tower {
  Word return_word;
  Cylinder base;  // [u.rv] = (u r v, |u|)
  int height = 0;
};

/// Kakutani-Rokhlin partition at level n: towers indexed by the return words
/// to omega[-n,-1] . omega[0,n].
struct KRPartition {
  OraclePtr sys;
  int level = 0;
  Word u;  // omega[-n,-1], length n
  Word v;  // omega[0,n],  length n+1
  std::vector<Tower> towers;

  Cylinder atom(int tower_index, int i) const;
  int min_height() const;
};

KRPartition kr_partition(const OrbitPoint& point, int n);

/// Partition axioms: atoms disjoint and covering, tower tops return to the
/// base union.
bool verify_kr(const KRPartition& p);

/// Every atom of `fine` inside exactly one atom of `coarse`, and base
/// nesting B(fine) inside B(coarse).
bool verify_kr_refinement(const KRPartition& fine, const KRPartition& coarse);

/// Number of ways to write r as a concatenation of the given blocks.
int count_block_decompositions(const Word& r, const std::vector<Word>& blocks);

/// sigma elements for each tower r and 0 <= i <= |r|-3; requires every tower
/// height >= 3 (TowerTooShort).
std::vector<GroupElement> tower_3cycles(const KRPartition& p);

/// Prop-style level embedding: each level-n tower 3-cycle equals the product
/// of the level-(n+1) 3-cycles sitting inside it.
bool level_embedding_check(const OrbitPoint& point, int n);

/// Finite-depth distinct-orbit test.  When the two points are known to share
/// their right half-line (equal right_tail_id), any window disagreement is a
/// certificate: on an aperiodic subshift, T^s would force an eventually
/// periodic half-line.  Otherwise falls back to comparing windows of p2
/// against T^s p1 for |s| <= depth, which is heuristic only.
bool orbits_separated_to_depth(const OrbitPoint& p1, const OrbitPoint& p2, int depth);

struct Factorization {
  int level = 0;
  std::vector<GeneratorSymbol> p_word;       // tower-interior permutation part
  std::vector<GeneratorSymbol> q_word;       // boundary part, supported in B
  ClopenSet boundary;                        // B = union of T^i[u.v]
};

/// Constructive P.Q factorization of a product of sigma generators: P is a
/// permutation of the chosen KR level fixing the forward orbit of omega, Q is
/// supported in the boundary set avoiding omega'.  Inverse generators are
/// first expanded via sigma^-1 = sigma^2.
Factorization factor_product(const std::vector<GeneratorSymbol>& word,
                             const OrbitPoint& omega, const OrbitPoint& omega_prime,
                             int level_ceiling = 64, int orbit_check_depth = 64);

}  // namespace tfg

#endif
