#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "symbreak/enumerate.hpp"
#include "symbreak/equivalence.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/graph6.hpp"

using namespace symbreak;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST(Graph, RejectsLoopsAndBadIndices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(g.add_edge(0, 3), IndexError);
  EXPECT_THROW(g.neighbors(5), IndexError);
  EXPECT_THROW(Graph(65), UnsupportedSize);
}

TEST(Graph, AdjacencyIsSymmetric) {
  Graph g(4);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(0, 0));
  EXPECT_EQ(g.edge_count(), 1);
  g.remove_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph, Neighbors) {
  EXPECT_EQ(path3().neighbors(1), (VertexSet{0, 2}));
  const auto k4 = generate_family({FamilyKind::complete, 4});
  EXPECT_EQ(k4.neighbors(0), (VertexSet{1, 2, 3}));
  Graph lonely(3);
  lonely.add_edge(0, 1);
  EXPECT_TRUE(lonely.neighbors(2).empty());
}

TEST(Graph, Complement) {
  const auto k3 = generate_family({FamilyKind::complete, 3});
  EXPECT_EQ(complement(k3), Graph(3));
  EXPECT_EQ(complement(Graph(5)), generate_family({FamilyKind::complete, 5}));

  const auto p4 = generate_family({FamilyKind::path, 4});
  EXPECT_TRUE(find_isomorphism(p4, complement(p4)).has_value());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto g = oracle::random_graph(1 + t % 12, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, InducedSubgraph) {
  const auto c5 = cycle_graph(5);
  const auto sub = induced_subgraph(c5, VertexSet{1, 2, 3, 4});
  EXPECT_TRUE(find_isomorphism(sub.graph, generate_family({FamilyKind::path, 4})).has_value());
  EXPECT_EQ(sub.index_map[0], -1);
  EXPECT_EQ(sub.index_map[3], 2);
  EXPECT_EQ(sub.vertices, (std::vector<int>{1, 2, 3, 4}));

  EXPECT_EQ(induced_subgraph(c5, c5.vertices()).graph, c5);
  EXPECT_EQ(induced_subgraph(c5, VertexSet()).graph.order(), 0);

  // x=0, y=1, d1=2, d2=3 with edges x-d1, y-d2, x-y, d1-d2 plus noise outside.
  const auto g = Graph::from_edges(6, {{0, 2}, {1, 3}, {0, 1}, {2, 3}, {4, 5}, {0, 4}});
  const auto square = induced_subgraph(g, VertexSet{0, 1, 2, 3}).graph;
  EXPECT_TRUE(find_isomorphism(square, cycle_graph(4)).has_value());
}

TEST(Graph, PermuteAndUnion) {
  const auto g = path3();
  const std::vector<std::uint8_t> image{2, 0, 1};
  const auto h = permute_vertices(g, image);
  EXPECT_TRUE(h.adjacent(2, 0));
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_FALSE(h.adjacent(2, 1));
  EXPECT_THROW(permute_vertices(g, std::vector<std::uint8_t>{0, 1}), DegreeError);

  const auto u = disjoint_union(g, Graph::from_edges(2, {{0, 1}}));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}}));
}

TEST(Graph6, SmallRecords) {
  EXPECT_EQ(parse_graph6("A_"), Graph::from_edges(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6("A?"), Graph(2));
  EXPECT_EQ(encode_graph6(Graph::from_edges(2, {{0, 1}})), "A_");
  EXPECT_EQ(encode_graph6(Graph(2)), "A?");
  EXPECT_EQ(encode_graph6(parse_graph6("D?{")), "D?{");
  EXPECT_EQ(parse_graph6(">>graph6<<A_\r\n"), parse_graph6("A_"));
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("A"), ParseError);      // missing data byte
  EXPECT_THROW(parse_graph6("A_?"), ParseError);    // trailing byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);     // nonzero padding
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError);  // byte above 126
  try {
    parse_graph6("Bw ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(encode_graph6(Graph(63)), UnsupportedSize);
}

TEST(Graph6, LongSizeFormIsAccepted) {
  Graph g(63);
  g.add_edge(0, 62);
  // 126 then three 6-bit digits of 63.
  std::string text = "~??~";
  const std::size_t slots = 63 * 62 / 2;
  std::string data((slots + 5) / 6, '?');
  const std::size_t bit = 61 * 62 / 2 + 0;  // slot of (0, 62)
  data[bit / 6] = static_cast<char>(63 + (1 << (5 - bit % 6)));
  EXPECT_EQ(parse_graph6(text + data), g);
}

TEST(Graph6, AgreesWithIndependentCodec) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto g = oracle::random_graph(t % 20, 0.5, rng);
    const auto text = encode_graph6(g);
    EXPECT_EQ(text, oracle::encode_graph6(oracle::adjacency(g)));
    EXPECT_EQ(oracle::decode_graph6(text), oracle::adjacency(g));
    EXPECT_EQ(parse_graph6(text), g);
  }
}

TEST(Graph6, ReadStream) {
  std::istringstream in(">>graph6<<\nA_\r\n\nBw\n");
  const auto graphs = read_graph6(in);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[1].edge_count(), 3);

  std::istringstream bad("A_\nA`\n");
  try {
    read_graph6(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Enumerate, CountsMatchBurnside) {
  for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
    EXPECT_EQ(enumerate_graphs(n).size(), oracle::burnside_count(n)) << "n=" << n;
  }
  EXPECT_EQ(enumerate_graphs(3).size(), 4U);
  EXPECT_EQ(enumerate_graphs(4).size(), 11U);
  EXPECT_THROW(enumerate_graphs(0), UnsupportedSize);
  EXPECT_THROW(enumerate_graphs(7), UnsupportedSize);
}

TEST(Enumerate, MembersArePairwiseNonIsomorphic) {
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = enumerate_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        EXPECT_FALSE(find_isomorphism(graphs[i], graphs[j]).has_value());
      }
    }
  }
  // n = 6 through canonical codes, which must all differ.
  std::set<std::uint64_t> codes;
  for (const auto& g : enumerate_graphs(6)) codes.insert(canonical_code(g));
  EXPECT_EQ(codes.size(), 156U);
}

TEST(Enumerate, CanonicalCodeIsRelabelingInvariant) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    const auto g = oracle::random_graph(n, 0.5, rng);
    const auto h = permute_vertices(g, oracle::random_permutation(n, rng));
    EXPECT_EQ(canonical_code(g), canonical_code(h));
  }
  EXPECT_THROW(canonical_code(Graph(9)), UnsupportedSize);
}

TEST(Families, Sizes) {
  EXPECT_EQ(generate_family({FamilyKind::path, 1}).order(), 1);
  EXPECT_EQ(generate_family({FamilyKind::path, 5}).edge_count(), 4);
  EXPECT_EQ(generate_family({FamilyKind::cycle, 5}).edge_count(), 5);
  EXPECT_EQ(generate_family({FamilyKind::complete, 6}).edge_count(), 15);
  const auto q4 = generate_family({FamilyKind::hypercube, 4});
  EXPECT_EQ(q4.order(), 16);
  EXPECT_EQ(q4.edge_count(), 32);
  for (int v = 0; v < 16; ++v) EXPECT_EQ(q4.degree(v), 4);

  for (int n = 1; n <= 4; ++n) {
    const auto g = generate_family({FamilyKind::clique_with_tails, n});
    const int clique = 1 << n;
    EXPECT_EQ(g.order(), n * clique);
    EXPECT_EQ(g.edge_count(), clique * (clique - 1) / 2 + (n - 1) * clique);
  }
  EXPECT_EQ(generate_family({FamilyKind::clique_with_tails, 1}),
            generate_family({FamilyKind::complete, 2}));
}

TEST(Families, CliqueWithTailsLayout) {
  const auto g = generate_family({FamilyKind::clique_with_tails, 3});
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(g.degree(i), 8);  // 7 clique neighbours + first tail vertex
    EXPECT_TRUE(g.adjacent(tail_vertex(3, i, 0), tail_vertex(3, i, 1)));
    EXPECT_TRUE(g.adjacent(tail_vertex(3, i, 1), tail_vertex(3, i, 2)));
    EXPECT_EQ(g.degree(tail_vertex(3, i, 2)), 1);
  }
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(generate_family({FamilyKind::cycle, 2}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::path, 0}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::complete, 0}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::hypercube, 0}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::hypercube, 7}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::clique_with_tails, 0}), SpecError);
  EXPECT_THROW(generate_family({FamilyKind::clique_with_tails, 5}), SpecError);
  EXPECT_EQ(parse_family_kind("clique_with_tails"), FamilyKind::clique_with_tails);
  EXPECT_FALSE(parse_family_kind("star").has_value());
}
