#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tron/analysis.hpp"
#include "tron/constructions.hpp"

using namespace tron;

namespace {

std::size_t tree_size(std::size_t d, std::size_t h) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t i = 0; i <= h; ++i, layer *= d) total += layer;
  return total;
}

bool is_root_to_root_hamilton(const Graph& g, const std::vector<Vertex>& seq, Vertex from, Vertex to) {
  if (seq.size() != g.vertex_count() || seq.front() != from || seq.back() != to) return false;
  std::set<Vertex> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) return false;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!g.has_edge(seq[i - 1], seq[i])) return false;
  return true;
}

}  // namespace

TEST(TwoPaths, ShapeAndLabels) {
  Graph g = two_paths(5);
  EXPECT_EQ(g.vertex_count(), 10u);
  EXPECT_EQ(g.edge_count(), 8u);
  EXPECT_EQ(oracle::longest_path(g, g.at("p1_start")), 4u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(two_paths(0), InvalidInput);
}

TEST(SuperVertex, AdjacentToEverything) {
  Graph g = add_super_vertex(two_paths(4));
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.neighbors(g.at("super")).size(), 8u);
  VertexSet some(4);
  some.insert(1);
  Graph h = add_super_vertex(fixtures::path(4), some);
  EXPECT_EQ(h.neighbors(h.at("super")).size(), 1u);
}

TEST(Visage, VertexAndEdgeArithmetic) {
  for (std::size_t l : {2u, 4u, 6u}) {
    Graph overhead = two_paths(4);
    Visage v = visage(l, overhead);
    const std::size_t o = overhead.vertex_count();
    EXPECT_EQ(v.graph.vertex_count(), o + 2 + 4 * l);
    // overhead edges, both bottlenecks to every overhead vertex, the cycle,
    // one attachment every fourth cycle vertex
    EXPECT_EQ(v.graph.edge_count(), overhead.edge_count() + 2 * o + 4 * l + l);
    EXPECT_EQ(v.params.box_attachments.size(), l / 2);
    EXPECT_EQ(v.params.cross_attachments.size(), l / 2);
    for (Vertex c : v.params.box_attachments) EXPECT_TRUE(v.graph.has_edge(c, v.graph.at("box")));
  }
  EXPECT_THROW(visage(3, two_paths(4)), InvalidInput);
  EXPECT_THROW(visage(0, two_paths(4)), InvalidInput);
}

TEST(Visage, PlanarAlternatesAttachments) {
  Visage v = planar_visage(VisageVariant::PlanarBob, 21, 7, two_paths(3));
  EXPECT_EQ(v.params.box_attachments.size(), 2u);
  EXPECT_EQ(v.params.cross_attachments.size(), 1u);
  EXPECT_EQ(v.params.cross_attachments[0], v.graph.at("path_start") + 7);
  Visage a = planar_visage(VisageVariant::PlanarAlice, 14, 7, two_paths(3));
  EXPECT_EQ(a.graph.at("alice_start"), a.params.overhead[0]);
  EXPECT_THROW(planar_visage(VisageVariant::Ordinary, 14, 7, two_paths(3)), InvalidInput);
  EXPECT_THROW(planar_visage(VisageVariant::PlanarBob, 10, 7, two_paths(3)), InvalidInput);
}

TEST(DoubleTree, SizeAndCrossEdgesFollowTheFormula) {
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t h : {1u, 2u, 3u}) {
      DoubleTree t = double_tree(d, h);
      const auto& p = t.params;
      EXPECT_EQ(t.graph.vertex_count(), 2 * tree_size(d, h));
      const std::size_t l = p.leaf_parents;
      std::set<std::pair<Vertex, Vertex>> expect;
      for (std::size_t j = 1; j <= l; ++j)
        for (std::size_t n = 1; n <= d; ++n)
          for (std::size_t m = 1; m <= d; ++m) {
            if (n <= m) expect.insert({p.u(n, j), p.v(m, j)});
            if (m <= n && j < l) expect.insert({p.u(n, j + 1), p.v(m, j)});
            if (m <= n && j == l) expect.insert({p.u(n, 1), p.v(m, l)});
          }
      std::set<std::pair<Vertex, Vertex>> got;
      for (Vertex a : p.upper_leaves)
        for (Vertex b : p.lower_leaves)
          if (t.graph.has_edge(a, b)) got.insert({a, b});
      EXPECT_EQ(got, expect) << "d=" << d << " h=" << h;
      for (std::size_t i = 0; i + 1 < p.upper_leaves.size(); ++i) {
        EXPECT_TRUE(t.graph.has_edge(p.upper_leaves[i], p.upper_leaves[i + 1]));
        EXPECT_TRUE(t.graph.has_edge(p.lower_leaves[i], p.lower_leaves[i + 1]));
      }
    }
  }
}

TEST(DoubleTree, HamiltonPathRootToRoot) {
  for (std::size_t d : {2u, 3u, 4u})
    for (std::size_t h : {1u, 2u, 3u}) {
      DoubleTree t = double_tree(d, h);
      auto seq = double_tree_hamilton(t);
      EXPECT_TRUE(is_root_to_root_hamilton(t.graph, seq, t.params.upper_root, t.params.lower_root))
          << "d=" << d << " h=" << h;
    }
}

TEST(DoubleTree, ConnectivityEqualsDegree) {
  for (std::size_t d : {2u, 3u}) EXPECT_EQ(oracle::kappa(double_tree(d, 1).graph), d);
  EXPECT_EQ(oracle::kappa(double_tree(2, 2).graph), 2u);
  EXPECT_THROW(double_tree(1, 2), InvalidInput);
}

TEST(AfarLeaves, SelectedLeavesAreFarApart) {
  DoubleTree t = double_tree(2, 5);
  std::vector<Vertex> leaves = t.params.upper_leaves;
  leaves.insert(leaves.end(), t.params.lower_leaves.begin(), t.params.lower_leaves.end());
  auto pick = select_afar_leaves(t.graph, leaves, 4, 6);
  ASSERT_TRUE(pick);
  for (Vertex a : *pick) {
    auto dist = bfs_distances(t.graph, a);
    for (Vertex b : *pick)
      if (a != b) {
        EXPECT_GE(dist[b], 6u);
      }
  }
  EXPECT_FALSE(select_afar_leaves(t.graph, leaves, 100, 6));
}

TEST(KConnectedVisage, BottlenecksAndConnectivityAtLeastK) {
  auto h = minimal_afar_height(2);
  ASSERT_TRUE(h);
  Visage v = k_connected_visage(2, *h, 2);
  EXPECT_EQ(v.params.box.size(), 2u);
  EXPECT_EQ(v.params.cross.size(), 2u);
  EXPECT_GE(vertex_connectivity(v.graph).kappa, 2u);
  for (std::size_t i = 0; i < 2; ++i)
    for (Vertex o : v.params.overhead) EXPECT_TRUE(v.graph.has_edge(o, v.params.box[i]));
  EXPECT_THROW(k_connected_visage(2, 1, 2), InvalidInput);
}
