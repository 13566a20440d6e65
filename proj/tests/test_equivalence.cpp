#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "symbreak/automorphisms.hpp"
#include "symbreak/enumerate.hpp"
#include "symbreak/equivalence.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"

using namespace symbreak;

namespace {

Graph family(FamilyKind kind, int n) { return generate_family({kind, n}); }

bool conjugates(const PermGroup& a, const PermGroup& b, const Permutation& sigma) {
  return conjugate(a, sigma) == b;
}

/// Tries all n! bijections.
bool brute_force_equivalent(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  std::vector<int> images(a.degree());
  std::iota(images.begin(), images.end(), 0);
  do {
    const auto sigma = Permutation::from_images(images);
    bool ok = true;
    for (const auto& p : a.elements()) {
      if (!b.contains(compose(sigma, compose(p, inverse(sigma))))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

std::vector<std::vector<int>> cycle_types(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& p : g.elements()) out.push_back(cycle_type(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Equivalence, RepresentationsEqual) {
  const auto p3 = automorphism_group(family(FamilyKind::path, 3));
  EXPECT_TRUE(representations_equal(p3, p3));
  // K2 on {0,2} plus the isolated vertex 1: same moved pair as P3.
  const auto k2_plus = automorphism_group(Graph::from_edges(3, {{0, 2}}));
  EXPECT_TRUE(representations_equal(p3, k2_plus));
  EXPECT_FALSE(representations_equal(p3, automorphism_group(family(FamilyKind::complete, 3))));
  EXPECT_FALSE(representations_equal(p3, PermGroup::trivial(4)));
}

TEST(Equivalence, SwappingLabelsBreaksEqualityButNotEquivalence) {
  // Two order-2 groups that only differ by how the points are named.
  const auto a = PermGroup::generated_by(4, std::vector{Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  const auto b = PermGroup::generated_by(4, std::vector{Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  EXPECT_FALSE(representations_equal(a, b));
  const auto cmp = compare_groups(a, b);
  ASSERT_EQ(cmp.verdict, EquivalenceVerdict::equivalent);
  EXPECT_TRUE(conjugates(a, b, *cmp.bijection));
}

TEST(Equivalence, Verdicts) {
  const auto k3 = automorphism_group(family(FamilyKind::complete, 3));
  const auto p3 = automorphism_group(family(FamilyKind::path, 3));
  EXPECT_EQ(compare_groups(p3, k3).verdict, EquivalenceVerdict::order_mismatch);
  EXPECT_EQ(compare_groups(p3, PermGroup::trivial(4)).verdict, EquivalenceVerdict::degree_mismatch);
  const auto a = PermGroup::generated_by(4, std::vector{Permutation::from_cycles(4, {{0, 1}})});
  const auto b = PermGroup::generated_by(4, std::vector{Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  EXPECT_EQ(compare_groups(a, b).verdict, EquivalenceVerdict::cycle_type_mismatch);
  EXPECT_EQ(to_string(EquivalenceVerdict::no_bijection), "search exhausted");
}

TEST(Equivalence, GraphExamples) {
  std::mt19937_64 rng(31);
  const auto g = oracle::random_graph(7, 0.4, rng);
  const auto self = distinguishably_equivalent(g, g);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_identity());

  EXPECT_FALSE(distinguishably_equivalent(family(FamilyKind::path, 3),
                                          family(FamilyKind::complete, 3)).has_value());
  EXPECT_FALSE(distinguishably_equivalent(Graph(3), Graph(4)).has_value());
}

TEST(Equivalence, ComplementsAndRelabelings) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    const auto g = oracle::random_graph(n, 0.5, rng);
    const auto aut = automorphism_group(g);
    const auto comp = complement(g);
    const auto sigma = distinguishably_equivalent(g, comp);
    ASSERT_TRUE(sigma.has_value()) << encode_graph6(g);
    EXPECT_TRUE(conjugates(aut, automorphism_group(comp), *sigma));

    const auto h = permute_vertices(g, oracle::random_permutation(n, rng));
    const auto tau = distinguishably_equivalent(g, h);
    ASSERT_TRUE(tau.has_value());
    const auto aut_h = automorphism_group(h);
    EXPECT_TRUE(conjugates(aut, aut_h, *tau));
    // Symmetric: the inverse conjugates back.
    EXPECT_TRUE(conjugates(aut_h, aut, inverse(*tau)));
    EXPECT_EQ(cycle_types(aut), cycle_types(aut_h));
  }
}

TEST(Equivalence, Transitive) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_graph(7, 0.5, rng);
    const auto h = complement(permute_vertices(g, oracle::random_permutation(7, rng)));
    const auto k = permute_vertices(h, oracle::random_permutation(7, rng));
    const auto gh = distinguishably_equivalent(g, h);
    const auto hk = distinguishably_equivalent(h, k);
    ASSERT_TRUE(gh && hk);
    EXPECT_TRUE(conjugates(automorphism_group(g), automorphism_group(k), compose(*hk, *gh)));
  }
}

TEST(Equivalence, MatchesBruteForceOnSmallGraphs) {
  // Every pair with equal group order and cycle types, where the cheap
  // invariants cannot decide.
  for (int n = 3; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    std::vector<PermGroup> groups;
    for (const auto& g : graphs) groups.push_back(automorphism_group(g));
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        if (groups[i].order() != groups[j].order()) continue;
        if (cycle_types(groups[i]) != cycle_types(groups[j])) continue;
        const auto cmp = compare_groups(groups[i], groups[j]);
        const bool expected = brute_force_equivalent(groups[i], groups[j]);
        EXPECT_EQ(cmp.verdict == EquivalenceVerdict::equivalent, expected)
            << encode_graph6(graphs[i]) << " " << encode_graph6(graphs[j]);
        if (cmp.bijection) {
          EXPECT_TRUE(conjugates(groups[i], groups[j], *cmp.bijection));
        }
      }
    }
  }
}

TEST(Equivalence, SyntheticGroupsWithEqualCycleTypes) {
  // <(0,1)(2,3)> x <(4,5)> and <(0,1)(4,5)> x <(2,3)> share their cycle-type
  // multiset; the verdict has to come from the point search.
  const auto a = PermGroup::generated_by(
      6, std::vector{Permutation::from_cycles(6, {{0, 1}, {2, 3}}), Permutation::from_cycles(6, {{4, 5}})});
  const auto b = PermGroup::generated_by(
      6, std::vector{Permutation::from_cycles(6, {{0, 1}, {4, 5}}), Permutation::from_cycles(6, {{2, 3}})});
  const auto cmp = compare_groups(a, b);
  EXPECT_EQ(cmp.verdict == EquivalenceVerdict::equivalent, brute_force_equivalent(a, b));
}

TEST(Equivalence, Budget) {
  const auto q3 = family(FamilyKind::hypercube, 3);
  std::mt19937_64 rng(34);
  const auto h = permute_vertices(q3, oracle::random_permutation(8, rng));
  EquivalenceOptions tiny;
  tiny.budget = 1;
  EXPECT_THROW(compare_groups(automorphism_group(q3), automorphism_group(h), tiny), BudgetExceeded);
}

TEST(EquivalenceClasses, ThreeVertices) {
  const auto graphs = enumerate_graphs(3);
  const auto result = equivalence_classes(graphs);
  ASSERT_EQ(result.classes.size(), 2U);
  EXPECT_TRUE(result.unresolved.empty());
  for (const auto& members : result.classes) {
    ASSERT_EQ(members.size(), 2U);
    const auto a = graphs[members[0]].edge_count();
    const auto b = graphs[members[1]].edge_count();
    // {empty, K3} and {K2 + K1, P3}
    EXPECT_EQ(a + b, 3);
  }
}

TEST(EquivalenceClasses, TrivialCases) {
  const std::vector<Graph> one{family(FamilyKind::cycle, 5)};
  EXPECT_EQ(equivalence_classes(one).classes.size(), 1U);
  EXPECT_TRUE(equivalence_classes(std::vector<Graph>{}).classes.empty());

  std::vector<Graph> asymmetric;
  for (const auto& g : enumerate_graphs(6)) {
    if (automorphism_group(g).order() == 1) asymmetric.push_back(g);
  }
  ASSERT_GE(asymmetric.size(), 2U);
  EXPECT_EQ(equivalence_classes(asymmetric).classes.size(), 1U);
}

TEST(EquivalenceClasses, IndependentOfJobsAndConsistentWithPairs) {
  std::vector<Graph> corpus;
  for (int n = 4; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) corpus.push_back(g);
  }
  const auto serial = equivalence_classes(corpus, {}, 1);
  const auto parallel = equivalence_classes(corpus, {}, 4);
  EXPECT_EQ(serial.classes, parallel.classes);
  std::vector<int> class_of(corpus.size(), -1);
  for (std::size_t c = 0; c < serial.classes.size(); ++c) {
    for (auto i : serial.classes[c]) class_of[i] = static_cast<int>(c);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      EXPECT_EQ(class_of[i] == class_of[j],
                distinguishably_equivalent(corpus[i], corpus[j]).has_value());
    }
  }
}
