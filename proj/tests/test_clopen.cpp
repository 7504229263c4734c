#include <doctest.h>

#include <random>

#include "bruteforce.hpp"
#include "tfg/clopen.hpp"
#include "tfg/error.hpp"
#include "tfg/recoder.hpp"

using namespace tfg;

namespace {

Substitution fibonacci() {
  return Substitution::from_json_text(R"({"alphabet": ["a","b"], "rules": {"a": "ab", "b": "a"}})");
}

OraclePtr fib_sys() {
  static OraclePtr sys = SubstitutionSystem::create(fibonacci());
  return sys;
}

Word parse(const std::string& text) { return fibonacci().alphabet().parse(text); }

Cylinder random_cylinder(std::mt19937_64& rng, const OraclePtr& sys) {
  std::uniform_int_distribution<int> len(1, 4);
  const int m = len(rng);
  const auto& words = sys->factors(m);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  Word w = words[pick(rng)];
  std::uniform_int_distribution<int> off(std::max(0, m - 4), std::min(4, m));
  return {std::move(w), off(rng)};  // min_radius <= 4 by the offset range
}

}  // namespace

TEST_SUITE("clopen") {

TEST_CASE("centered form of a cylinder") {
  auto sys = fib_sys();

  // inadmissible word: no admissible centered extension
  CHECK(to_clopen(sys, {parse("aaa"), 0}).is_empty());

  // ("a",0) at radius 1: centered words z with z_1 = a
  auto s = to_clopen(sys, {parse("a"), 0}, 1);
  CHECK(s.members() == std::set<Word>{parse("aa"), parse("ba")});

  // refining and reducing round-trips the canonical form
  auto r = s.refined(4).reduced();
  CHECK(r.radius() == 1);
  CHECK(r.members() == s.members());
  CHECK(s.refined(3).same_set(s));

  CHECK_THROWS_AS(to_clopen(sys, {parse("abaab"), 2}, 2), Error);  // RadiusTooSmall
}

TEST_CASE("subset decision") {
  auto sys = fib_sys();
  Cylinder ab0{parse("ab"), 0}, a0{parse("a"), 0}, aa0{parse("aa"), 0};
  CHECK(is_subset(sys, ab0, ab0));
  CHECK(is_subset(sys, ab0, a0));
  CHECK_FALSE(is_subset(sys, aa0, ab0));
  // offset translation: (a,3) inside (a,3), not inside (b,3)
  CHECK(is_subset(sys, {parse("a"), 3}, {parse("a"), 3}));
  CHECK_FALSE(is_subset(sys, {parse("a"), 3}, {parse("b"), 3}));
}

TEST_CASE("3-disjointness") {
  auto sys = fib_sys();
  Cylinder a0{parse("a"), 0};
  CHECK_FALSE(are_3disjoint(sys, a0, a0));
  CHECK(are_3disjoint(sys, {parse("aaa"), 0}, a0));  // empty support
  CHECK(are_3disjoint(sys, {parse("aaa"), 0}, {parse("aaa"), 5}));
}

TEST_CASE("cylinder partitions") {
  auto sys = fib_sys();
  Cylinder a0{parse("a"), 0};
  CHECK(verify_cylinder_partition(sys, a0, {a0}));

  auto left = left_refinement(sys, a0);
  CHECK(left == std::vector<Cylinder>{{parse("aa"), 1}, {parse("ba"), 1}});
  CHECK(verify_cylinder_partition(sys, a0, left));

  auto right = right_refinement(sys, a0);
  CHECK(right == std::vector<Cylinder>{{parse("aa"), 0}, {parse("ab"), 0}});
  CHECK(verify_cylinder_partition(sys, a0, right));

  CHECK(right_refinement(sys, {parse("b"), 0}) == std::vector<Cylinder>{{parse("ba"), 0}});

  // dropping a piece breaks coverage
  CHECK_FALSE(verify_cylinder_partition(sys, a0, {left.front()}));
  // overlapping pieces break disjointness
  CHECK_FALSE(verify_cylinder_partition(sys, a0, {a0, left.front()}));

  CHECK_THROWS_AS(left_refinement(sys, {parse("bb"), 0}), Error);  // NotInLanguage

  // every refinement of every short cylinder verifies
  for (int m = 1; m <= 3; ++m) {
    for (const Word& w : sys->factors(m)) {
      for (int i = 0; i <= m; ++i) {
        CHECK(verify_cylinder_partition(sys, {w, i}, left_refinement(sys, {w, i})));
        CHECK(verify_cylinder_partition(sys, {w, i}, right_refinement(sys, {w, i})));
      }
    }
  }
}

TEST_CASE("shifting") {
  auto sys = fib_sys();
  auto u = to_clopen(sys, {parse("ab"), 1});
  CHECK(u.shifted(0).same_set(u));
  CHECK(u.shifted(3).shifted(-3).same_set(u));
  CHECK(u.shifted(3).shifted(-3).reduced().members() == u.reduced().members());
  CHECK(u.shifted(1).same_set(to_clopen(sys, {parse("ab"), 2})));
  CHECK(shift_clopen(u, -2).same_set(to_clopen(sys, {parse("ab"), -1})));
}

TEST_CASE("boolean algebra round trips") {
  auto sys = fib_sys();
  auto u = to_clopen(sys, {parse("ab"), 0});
  auto v = to_clopen(sys, {parse("aa"), 1});
  CHECK(u.unite(u.complement()).same_set(ClopenSet::whole(sys)));
  CHECK(u.intersect(u.complement()).is_empty());
  CHECK(u.subtract(v).unite(u.intersect(v)).same_set(u));
  CHECK(u.intersect(v).subset_of(u));
  CHECK(u.subset_of(u.unite(v)));
}

TEST_CASE("agreement with the positional oracle") {
  auto sys = fib_sys();
  auto window_words = testing::bf_factors(fibonacci(), 20);
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Cylinder c1 = random_cylinder(rng, sys);
    Cylinder c2 = random_cylinder(rng, sys);

    bool oracle_subset = true;
    bool oracle_disjoint = true;
    for (const Word& z : window_words) {
      const bool in1 = testing::bf_window_in_cylinder(z, c1.word, c1.offset);
      const bool in2 = testing::bf_window_in_cylinder(z, c2.word, c2.offset);
      if (in1 && !in2) oracle_subset = false;
      if (in1 && in2) oracle_disjoint = false;
    }
    CHECK(is_subset(sys, c1, c2) == oracle_subset);
    CHECK(to_clopen(sys, c1).disjoint_from(to_clopen(sys, c2)) == oracle_disjoint);
  }
}

TEST_CASE("3-disjointness is symmetric and monotone") {
  auto sys = fib_sys();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Cylinder c1 = random_cylinder(rng, sys);
    Cylinder c2 = random_cylinder(rng, sys);
    const bool d12 = are_3disjoint(sys, c1, c2);
    CHECK(d12 == are_3disjoint(sys, c2, c1));
    if (d12 && sys->contains(c1.word)) {
      // 3-disjointness survives passing to subsets
      for (const Cylinder& finer : left_refinement(sys, c1)) {
        CHECK(are_3disjoint(sys, finer, c2));
      }
    }
  }
}

}  // TEST_SUITE
