#pragma once

#include "tron/graph.hpp"
#include "tron/solver.hpp"

namespace tron {

/// Vertex roles of a visage graph recovered from its "box"/"cross" labels:
/// the overhead is everything adjacent to both bottleneck vertices.
struct VisageRoles {
  Vertex box = 0;
  Vertex cross = 0;
  VertexSet overhead;
  VertexSet arena;

  bool bottleneck(Vertex v) const { return v == box || v == cross; }
  Vertex other(Vertex v) const { return v == box ? cross : box; }
};

VisageRoles visage_roles(const Graph& g);

/// Bob's scripted strategy on a visage (ordinary or planar):
///  - Alice in the arena: start at the nearer bottleneck, cross the overhead
///    to the other one, then enter the arena ahead of her.
///  - Alice in the overhead or on a bottleneck: start in the overhead, play
///    the overhead subgame, wait one turn when she steps onto a bottleneck,
///    take the other bottleneck when she commits to a side.
/// Outside these cases Bob plays a Voronoi/longest-path greedy move.
ScriptedPolicy visage_bob_policy(const Graph& g);

/// Alice's counterpart on the planar Alice variant: she starts at the
/// "alice_start" label and applies the same trapping rules with roles swapped.
ScriptedPolicy planar_visage_alice_policy(const Graph& g);

/// Voronoi/longest-path greedy move for `me`; pass when stuck.
Move greedy_move(const Graph& g, const GameRules& rules, const GameState& s, Player me);

}  // namespace tron
