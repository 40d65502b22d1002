#include <gtest/gtest.h>

#include "powergraph/graph.hpp"
#include "powergraph/vertex_set.hpp"

using namespace powergraph;

TEST(VertexSet, BasicOperations) {
  VertexSet a(130), b(130);
  a.insert(0);
  a.insert(64);
  a.insert(129);
  b.insert(64);
  EXPECT_EQ(a.count(), 3U);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_EQ((a - b).to_vector(), (std::vector<std::size_t>{0, 129}));
  EXPECT_EQ((a ^ b).count(), 2U);
  EXPECT_EQ(a.first(), 0U);
  EXPECT_EQ(a.next(1), 64U);
  EXPECT_EQ(a.next(130), 130U);
  EXPECT_EQ(VertexSet::full(130).count(), 130U);
  EXPECT_TRUE(VertexSet(5).empty());
}

TEST(Graph, EdgesAndComplete) {
  Graph k4 = Graph::complete(4);
  EXPECT_EQ(k4.edge_count(), 6U);
  Graph g(3);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}}));
  EXPECT_EQ(g.degree(1), 0U);
}

TEST(Digraph, UnderlyingAndSubdigraph) {
  Digraph d(3), e(3);
  d.add_arc(0, 1);
  e.add_arc(0, 1);
  e.add_arc(1, 2);
  EXPECT_TRUE(d.is_subdigraph_of(e));
  EXPECT_FALSE(e.is_subdigraph_of(d));
  EXPECT_EQ(e.underlying().edge_count(), 2U);
  EXPECT_EQ(e.arc_count(), 2U);
}

TEST(ExportDot, ByteStable) {
  Graph g(2);
  g.add_edge(0, 1);
  EXPECT_EQ(export_dot(g, {"e", "g"}), "graph G {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -- 1;\n}\n");
  Digraph d(2);
  d.add_arc(1, 0);
  EXPECT_EQ(export_dot(d), "digraph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  1 -> 0;\n}\n");
  EXPECT_EQ(export_dot(Graph(1)), "graph G {\n  0 [label=\"0\"];\n}\n");
}

TEST(AdjacencyJson, Shapes) {
  Graph g(3);
  g.add_edge(1, 2);
  g.add_edge(0, 1);
  EXPECT_EQ(adjacency_json(g), R"({"n":3,"edges":[[0,1],[1,2]]})");
  Digraph d(2);
  d.add_arc(1, 0);
  EXPECT_EQ(adjacency_json(d), R"({"n":2,"arcs":[[1,0]]})");
}
