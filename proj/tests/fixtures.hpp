#pragma once

#include "tron/graph.hpp"

namespace fixtures {

inline tron::Graph path(std::size_t n) {
  tron::GraphBuilder b;
  b.add_vertices(n);
  for (tron::Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline tron::Graph cycle(std::size_t n) {
  tron::GraphBuilder b;
  b.add_vertices(n);
  for (tron::Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<tron::Vertex>((i + 1) % n));
  return b.build();
}

inline tron::Graph complete(std::size_t n) {
  tron::GraphBuilder b;
  b.add_vertices(n);
  for (tron::Vertex u = 0; u < n; ++u)
    for (tron::Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline tron::Graph star(std::size_t leaves) {
  tron::GraphBuilder b;
  b.add_vertices(leaves + 1);
  for (tron::Vertex i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

}  // namespace fixtures
