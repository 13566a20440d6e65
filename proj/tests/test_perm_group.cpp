#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/perm_group.hpp"
#include "symbreak/permutation.hpp"

using namespace symbreak;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  return Permutation(oracle::random_permutation(n, rng));
}

}  // namespace

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), ArgumentError);
  EXPECT_THROW(Permutation::from_images({0, 3}), ArgumentError);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), ArgumentError);
  EXPECT_EQ(Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_images({1, 2, 0}));
}

TEST(Permutation, ComposeRightToLeft) {
  const auto swap01 = Permutation::from_cycles(3, {{0, 1}});
  const auto swap12 = Permutation::from_cycles(3, {{1, 2}});
  EXPECT_TRUE(compose(swap01, swap01).is_identity());
  EXPECT_EQ(compose(swap01, swap12), Permutation::from_images({1, 2, 0}));
  EXPECT_EQ(compose(swap01, swap12).to_string(), "(0,1,2)");
  // (x d1)(y) * (y d1)(x) = (x d1 y) with x=0, y=1, d1=2.
  const auto a = Permutation::from_cycles(3, {{0, 2}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  EXPECT_EQ(compose(a, b), Permutation::from_cycles(3, {{0, 2, 1}}));
  EXPECT_THROW(compose(swap01, Permutation::identity(4)), DegreeError);
}

TEST(Permutation, Inverse) {
  EXPECT_TRUE(inverse(Permutation::identity(4)).is_identity());
  EXPECT_EQ(inverse(Permutation::from_cycles(3, {{0, 1, 2}})),
            Permutation::from_cycles(3, {{0, 2, 1}}));
  const auto t = Permutation::from_cycles(5, {{1, 3}});
  EXPECT_EQ(inverse(t), t);
}

TEST(Permutation, CycleType) {
  EXPECT_EQ(cycle_type(Permutation::identity(5)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Permutation::from_cycles(5, {{0, 1}, {2, 3}})),
            (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(cycle_type(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})), (std::vector<int>{5}));
}

TEST(Permutation, CyclesReproduceImages) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_perm(1 + t % 12, rng);
    EXPECT_EQ(Permutation::from_cycles(p.degree(), p.cycles()), p);
    int total = 0;
    for (const auto& c : p.cycles()) {
      total += static_cast<int>(c.size());
      EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
      for (int v : c) EXPECT_EQ(p.cycle_length(v), static_cast<int>(c.size()));
    }
    EXPECT_EQ(total, p.degree());
  }
}

TEST(Permutation, GroupLaws) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 10;
    const auto p = random_perm(n, rng);
    const auto q = random_perm(n, rng);
    const auto r = random_perm(n, rng);
    const auto e = Permutation::identity(n);
    EXPECT_EQ(compose(p, compose(q, r)), compose(compose(p, q), r));
    EXPECT_EQ(compose(e, p), p);
    EXPECT_EQ(compose(p, e), p);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
    for (int v = 0; v < n; ++v) EXPECT_EQ(compose(p, q)(v), p(q(v)));
    EXPECT_EQ(cycle_type(compose(q, compose(p, inverse(q)))), cycle_type(p));
  }
}

TEST(Permutation, SupportAndApply) {
  const auto p = Permutation::from_cycles(6, {{0, 3}, {1, 4, 5}});
  EXPECT_EQ(p.support(), (VertexSet{0, 1, 3, 4, 5}));
  EXPECT_EQ(p.apply(VertexSet{0, 1}), (VertexSet{3, 4}));
  EXPECT_TRUE(p.fixes(2));
}

TEST(Labeling, Relabel) {
  EXPECT_EQ(relabel(Permutation::identity(3), Labeling::one_based(3)), "(1)(2)(3)");
  EXPECT_EQ(relabel(Permutation::from_cycles(2, {{0, 1}}), Labeling({"1a", "2a"})), "(1a,2a)");
  EXPECT_EQ(relabel(Permutation::from_cycles(2, {{0, 1}}), Labeling::identity(2)), "(0,1)");
  EXPECT_THROW(Labeling({"a", "a"}), ArgumentError);
  EXPECT_THROW(relabel(Permutation::identity(3), Labeling::identity(2)), DegreeError);
}

TEST(PermGroup, GeneratedBySymmetricGroup) {
  const std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}}),
                                      Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  const auto s4 = PermGroup::generated_by(4, gens);
  EXPECT_EQ(s4.order(), 24U);
  EXPECT_TRUE(s4[0].is_identity());
  EXPECT_TRUE(satisfies_group_axioms(4, s4.elements()));
  EXPECT_EQ(24 % s4.order(), 0U);
  EXPECT_TRUE(s4.contains(Permutation::from_cycles(4, {{1, 3}})));
  EXPECT_FALSE(PermGroup::trivial(4).contains(Permutation::from_cycles(4, {{1, 3}})));
}

TEST(PermGroup, AxiomsAreChecked) {
  const auto t = Permutation::from_cycles(3, {{0, 1}});
  const auto c = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_THROW(PermGroup::from_elements(3, {t}), ArgumentError);  // no identity
  EXPECT_THROW(PermGroup::from_elements(3, {Permutation::identity(3), c}), ArgumentError);
  EXPECT_NO_THROW(PermGroup::from_elements(3, {Permutation::identity(3), t}));
}

TEST(PermGroup, RepresentationIsInjective) {
  const std::vector<Permutation> gens{Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                      Permutation::from_cycles(5, {{1, 4}, {2, 3}})};
  const auto d5 = PermGroup::generated_by(5, gens);
  const auto rep = representation(d5, Labeling({"a", "b", "c", "d", "e"}));
  EXPECT_EQ(std::set<std::string>(rep.begin(), rep.end()).size(), d5.order());
}

TEST(PermGroup, Conjugate) {
  const auto g = PermGroup::generated_by(3, std::vector{Permutation::from_cycles(3, {{0, 1}})});
  const auto sigma = Permutation::from_cycles(3, {{1, 2}});
  const auto h = conjugate(g, sigma);
  EXPECT_TRUE(h.contains(Permutation::from_cycles(3, {{0, 2}})));
  EXPECT_EQ(h.order(), 2U);
}
