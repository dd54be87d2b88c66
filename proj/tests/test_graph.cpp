#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tron/graph.hpp"
#include "tron/graph_io.hpp"

using namespace tron;

TEST(VertexSet, InsertEraseCount) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_TRUE(s.contains(64));
  s.erase(64);
  EXPECT_FALSE(s.contains(64));
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 129}));
  EXPECT_THROW(s.insert(130), InvalidInput);
}

TEST(Graph, BuilderPathAndLabels) {
  GraphBuilder b;
  Vertex a = b.add_vertex("a");
  Vertex z = b.add_vertex("z");
  auto inner = b.add_path(a, z, 3);
  Graph g = b.build();
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(inner.size(), 2u);
  EXPECT_EQ(g.at("z"), z);
  EXPECT_FALSE(g.find_label("missing"));
  EXPECT_THROW(g.at("missing"), InvalidInput);
  EXPECT_TRUE(g.has_edge(inner.back(), z));
  EXPECT_TRUE(g.has_edge(z, inner.back()));
}

TEST(Graph, RejectsSelfLoopsDuplicatesAndLabelClashes) {
  GraphBuilder loop;
  loop.add_vertices(2);
  loop.add_edge(1, 1);
  EXPECT_THROW(loop.build(), InvalidInput);
  GraphBuilder dup;
  dup.add_vertices(2);
  dup.add_edge(0, 1);
  dup.add_edge(1, 0);
  EXPECT_THROW(dup.build(), InvalidInput);
  GraphBuilder lab;
  lab.add_vertex("x");
  EXPECT_THROW(lab.add_vertex("x"), InvalidInput);
}

TEST(Graph, DirectedEdgesKeepOrientation) {
  GraphBuilder b(true);
  b.add_vertices(2);
  b.add_edge(0, 1);
  Graph g = b.build();
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_TRUE(undirected_copy(g).has_edge(1, 0));
}

TEST(Graph, EmbedPrefixesLabels) {
  GraphBuilder inner;
  inner.add_vertex("s");
  inner.add_vertex("t");
  inner.add_edge(0, 1);
  GraphBuilder outer;
  outer.add_vertex("root");
  Vertex off = outer.embed(inner.build(), "copy/");
  Graph g = outer.build();
  EXPECT_EQ(off, 1u);
  EXPECT_EQ(g.at("copy/t"), 2u);
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(Graph, BfsDistancesOnCycle) {
  auto d = bfs_distances(fixtures::cycle(6), 0);
  EXPECT_EQ(d, (std::vector<std::size_t>{0, 1, 2, 3, 2, 1}));
  VertexSet blocked(6);
  blocked.insert(1);
  auto e = bfs_distances(fixtures::cycle(6), 0, blocked);
  EXPECT_EQ(e[1], kUnreachable);
  EXPECT_EQ(e[2], 4u);
}

TEST(Graph, RemoveVerticesRenumbers) {
  GraphBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_vertex("c");
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  VertexSet rm(3);
  rm.insert(0);
  Graph h = remove_vertices(b.build(), rm);
  EXPECT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(h.at("b"), 0u);
  EXPECT_EQ(h.at("c"), 1u);
  EXPECT_FALSE(h.find_label("a"));
  EXPECT_TRUE(h.has_edge(0, 1));
}

TEST(GraphIo, JsonRoundTrip) {
  GraphBuilder b(true);
  b.add_vertex("src");
  b.add_vertices(2);
  b.add_edge(0, 1);
  b.add_edge(2, 0);
  Graph g = b.build();
  Graph back = parse_graph_json(to_json_text(g));
  EXPECT_TRUE(back == g);
  EXPECT_TRUE(back.directed());
  EXPECT_EQ(back.at("src"), 0u);
}

TEST(GraphIo, MalformedJsonIsRejected) {
  EXPECT_THROW(parse_graph_json("{"), InvalidInput);
  EXPECT_THROW(parse_graph_json(R"({"directed":false,"n":2,"edges":[[0,5]]})"), InvalidInput);
  EXPECT_THROW(parse_graph_json(R"({"directed":false,"n":2,"edges":[[0]]})"), InvalidInput);
}

TEST(GraphIo, DotMentionsEdgesAndLabels) {
  GraphBuilder b;
  b.add_vertex("box");
  b.add_vertex();
  b.add_edge(0, 1);
  std::string dot = to_dot(b.build(), "demo");
  EXPECT_NE(dot.find("graph demo"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("box"), std::string::npos);
}
