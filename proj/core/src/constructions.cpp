#include "tron/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tron {

Graph two_paths(std::size_t m) {
  if (m < 1) throw InvalidInput("two_paths: m must be at least 1");
  GraphBuilder b;
  for (int p = 1; p <= 2; ++p) {
    Vertex first = b.add_vertices(m);
    for (std::size_t i = 0; i + 1 < m; ++i) b.add_edge(first + i, first + i + 1);
    b.set_label("p" + std::to_string(p) + "_start", first);
    if (m > 1) b.set_label("p" + std::to_string(p) + "_end", first + static_cast<Vertex>(m - 1));
  }
  return b.build();
}

Graph add_super_vertex(const Graph& g, const std::optional<VertexSet>& attach) {
  if (g.directed()) throw InvalidInput("add_super_vertex: graph must be undirected");
  GraphBuilder b;
  b.embed(g);
  Vertex s = b.add_vertex("super");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!attach || attach->contains(v)) b.add_edge(v, s);
  return b.build();
}

std::string to_string(VisageVariant v) {
  switch (v) {
    case VisageVariant::Ordinary: return "ordinary";
    case VisageVariant::PlanarBob: return "planar-bob";
    case VisageVariant::PlanarAlice: return "planar-alice";
    case VisageVariant::KConnected: return "k-connected";
  }
  return "?";
}

namespace {

// Embeds the overhead, adds box and cross joined to every overhead vertex.
void add_overhead(GraphBuilder& b, const Graph& overhead, VisageParams& p) {
  if (overhead.directed()) throw InvalidInput("visage: overhead must be undirected");
  if (overhead.vertex_count() == 0) throw InvalidInput("visage: overhead must be non-empty");
  Vertex off = b.embed(overhead, "overhead_");
  for (Vertex v = 0; v < overhead.vertex_count(); ++v) p.overhead.push_back(off + v);
  p.box.push_back(b.add_vertex("box"));
  p.cross.push_back(b.add_vertex("cross"));
  for (Vertex o : p.overhead) {
    b.add_edge(o, p.box[0]);
    b.add_edge(o, p.cross[0]);
  }
}

}  // namespace

Visage visage(std::size_t l, const Graph& overhead) {
  if (l < 2 || l % 2 != 0) throw InvalidInput("visage: l must be even and at least 2");
  Visage out;
  auto& p = out.params;
  p.variant = VisageVariant::Ordinary;
  p.scale = l;
  p.spacing = 4;
  GraphBuilder b;
  add_overhead(b, overhead, p);
  const std::size_t len = 4 * l;
  Vertex c0 = b.add_vertices(len);
  for (std::size_t i = 0; i < len; ++i) {
    p.arena.push_back(c0 + static_cast<Vertex>(i));
    b.add_edge(c0 + static_cast<Vertex>(i), c0 + static_cast<Vertex>((i + 1) % len));
  }
  b.set_label("circle_0", c0);
  for (std::size_t i = 0; i < len; i += 4) {
    bool box = i % 8 == 0;
    Vertex c = c0 + static_cast<Vertex>(i);
    b.add_edge(c, box ? p.box[0] : p.cross[0]);
    (box ? p.box_attachments : p.cross_attachments).push_back(c);
  }
  out.graph = b.build();
  return out;
}

Visage planar_visage(VisageVariant variant, std::size_t path_len, std::size_t spacing, const Graph& overhead) {
  if (variant != VisageVariant::PlanarBob && variant != VisageVariant::PlanarAlice)
    throw InvalidInput("planar_visage: variant must be planar-bob or planar-alice");
  if (spacing == 0) throw InvalidInput("planar_visage: spacing must be positive");
  if (path_len < 2 * spacing)
    throw InvalidInput("planar_visage: path_len " + std::to_string(path_len) + " is below twice the spacing");
  Visage out;
  auto& p = out.params;
  p.variant = variant;
  p.scale = path_len;
  p.spacing = spacing;
  GraphBuilder b;
  add_overhead(b, overhead, p);
  if (variant == VisageVariant::PlanarAlice) {
    Vertex start = overhead.find_label("alice_start").value_or(0);
    b.set_label("alice_start", p.overhead[start]);
  }
  Vertex p0 = b.add_vertices(path_len);
  for (std::size_t i = 0; i < path_len; ++i) {
    p.arena.push_back(p0 + static_cast<Vertex>(i));
    if (i + 1 < path_len) b.add_edge(p0 + static_cast<Vertex>(i), p0 + static_cast<Vertex>(i + 1));
  }
  b.set_label("path_start", p0);
  b.set_label("path_end", p0 + static_cast<Vertex>(path_len - 1));
  bool box = true;
  for (std::size_t i = 0; i < path_len; i += spacing, box = !box) {
    Vertex c = p0 + static_cast<Vertex>(i);
    b.add_edge(c, box ? p.box[0] : p.cross[0]);
    (box ? p.box_attachments : p.cross_attachments).push_back(c);
  }
  out.graph = b.build();
  return out;
}

// ---------------------------------------------------------------------------
// Double-trees

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct TreeShape {
  std::size_t d;
  std::size_t size;
  std::size_t first_leaf;
};

TreeShape shape(std::size_t d, std::size_t h) {
  std::size_t size = 0;
  for (std::size_t i = 0; i <= h; ++i) size += ipow(d, i);
  return {d, size, size - ipow(d, h)};
}

void build_double_tree(GraphBuilder& b, DoubleTreeParams& p, std::size_t d, std::size_t h, const std::string& prefix) {
  if (d < 2) throw InvalidInput("double_tree: d must be at least 2");
  if (h < 1) throw InvalidInput("double_tree: h must be at least 1");
  if (ipow(d, h) > 4096) throw InvalidInput("double_tree: too large");
  p.d = d;
  p.h = h;
  p.leaf_parents = ipow(d, h - 1);
  TreeShape s = shape(d, h);
  Vertex up = b.add_vertices(s.size);
  Vertex lo = b.add_vertices(s.size);
  std::size_t total = b.vertex_count();
  if (p.children.size() < total) p.children.resize(total);
  for (Vertex base : {up, lo}) {
    for (std::size_t i = 0; i < s.first_leaf; ++i)
      for (std::size_t c = 1; c <= d; ++c) {
        Vertex child = base + static_cast<Vertex>(d * i + c);
        b.add_edge(base + static_cast<Vertex>(i), child);
        p.children[base + i].push_back(child);
      }
  }
  p.upper_root = up;
  p.lower_root = lo;
  b.set_label(prefix + "upper_root", up);
  b.set_label(prefix + "lower_root", lo);
  p.upper_leaves.clear();
  p.lower_leaves.clear();
  for (std::size_t i = s.first_leaf; i < s.size; ++i) {
    p.upper_leaves.push_back(up + static_cast<Vertex>(i));
    p.lower_leaves.push_back(lo + static_cast<Vertex>(i));
  }
  const std::size_t leaves = p.upper_leaves.size();
  for (std::size_t i = 0; i + 1 < leaves; ++i) {
    b.add_edge(p.upper_leaves[i], p.upper_leaves[i + 1]);
    b.add_edge(p.lower_leaves[i], p.lower_leaves[i + 1]);
  }
  std::set<Edge> cross;
  const std::size_t l = p.leaf_parents;
  for (std::size_t j = 1; j <= l; ++j)
    for (std::size_t n = 1; n <= d; ++n)
      for (std::size_t m = 1; m <= d; ++m) {
        if (n <= m) cross.emplace(p.u(n, j), p.v(m, j));
        if (m <= n && j < l) cross.emplace(p.u(n, j + 1), p.v(m, j));
        if (m <= n && j == l) cross.emplace(p.u(n, 1), p.v(m, l));
      }
  for (auto [a, c] : cross) b.add_edge(a, c);
  if (prefix.empty()) {
    for (std::size_t j = 1; j <= l; ++j)
      for (std::size_t i = 1; i <= d; ++i) {
        std::string tag = std::to_string(i) + "^" + std::to_string(j);
        b.set_label("u_" + tag, p.u(i, j));
        b.set_label("v_" + tag, p.v(i, j));
      }
  }
}

// Paths covering the full subtrees rooted at `r`, each running from a leaf to
// the next leaf to the right through internal vertices.
void partition(const DoubleTreeParams& p, Vertex r, std::vector<std::vector<Vertex>>& out) {
  const auto& ch = p.children[r];
  if (ch.empty()) {
    out.push_back({r});
    return;
  }
  std::vector<Vertex> right_spine{ch[0]};
  while (!p.children[right_spine.back()].empty()) right_spine.push_back(p.children[right_spine.back()].back());
  std::vector<Vertex> left_spine{ch[1]};
  while (!p.children[left_spine.back()].empty()) left_spine.push_back(p.children[left_spine.back()].front());
  std::vector<Vertex> path(right_spine.rbegin(), right_spine.rend());
  path.push_back(r);
  path.insert(path.end(), left_spine.begin(), left_spine.end());
  out.push_back(std::move(path));
  for (std::size_t i = 0; i + 1 < right_spine.size(); ++i) {
    const auto& c = p.children[right_spine[i]];
    for (std::size_t k = 0; k + 1 < c.size(); ++k) partition(p, c[k], out);
  }
  for (std::size_t i = 0; i + 1 < left_spine.size(); ++i) {
    const auto& c = p.children[left_spine[i]];
    for (std::size_t k = 1; k < c.size(); ++k) partition(p, c[k], out);
  }
  for (std::size_t k = 2; k < ch.size(); ++k) partition(p, ch[k], out);
}

// Root down the left spine, then the rest of the tree leaf to leaf.
std::vector<Vertex> half_path(const DoubleTreeParams& p, Vertex root, const std::vector<Vertex>& leaves) {
  std::vector<Vertex> spine{root};
  while (!p.children[spine.back()].empty()) spine.push_back(p.children[spine.back()].front());
  std::vector<std::vector<Vertex>> pieces;
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
    const auto& c = p.children[spine[i]];
    for (std::size_t k = 1; k < c.size(); ++k) partition(p, c[k], pieces);
  }
  std::vector<std::size_t> pos(p.children.size(), 0);
  for (std::size_t i = 0; i < leaves.size(); ++i) pos[leaves[i]] = i;
  std::sort(pieces.begin(), pieces.end(),
            [&](const auto& a, const auto& b) { return pos[a.front()] < pos[b.front()]; });
  for (const auto& piece : pieces) spine.insert(spine.end(), piece.begin(), piece.end());
  return spine;
}

}  // namespace

DoubleTree double_tree(std::size_t d, std::size_t h) {
  DoubleTree t;
  GraphBuilder b;
  build_double_tree(b, t.params, d, h, "");
  t.graph = b.build();
  return t;
}

std::vector<Vertex> double_tree_hamilton(const DoubleTree& t) {
  const auto& p = t.params;
  auto upper = half_path(p, p.upper_root, p.upper_leaves);
  auto lower = half_path(p, p.lower_root, p.lower_leaves);
  upper.insert(upper.end(), lower.rbegin(), lower.rend());
  return upper;
}

std::vector<Vertex> double_tree_hamilton(std::size_t d, std::size_t h) { return double_tree_hamilton(double_tree(d, h)); }

std::optional<std::vector<Vertex>> select_afar_leaves(const Graph& g, const std::vector<Vertex>& leaves, std::size_t m,
                                                     std::size_t min_dist) {
  std::vector<Vertex> chosen;
  std::vector<std::vector<std::size_t>> dist;
  for (Vertex leaf : leaves) {
    if (chosen.size() == m) break;
    bool ok = true;
    for (const auto& row : dist)
      if (row[leaf] < min_dist) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(leaf);
    dist.push_back(bfs_distances(g, leaf));
  }
  if (chosen.size() < m) return std::nullopt;
  return chosen;
}

namespace {

std::vector<Vertex> all_leaves(const DoubleTreeParams& p) {
  std::vector<Vertex> leaves = p.upper_leaves;
  leaves.insert(leaves.end(), p.lower_leaves.begin(), p.lower_leaves.end());
  return leaves;
}

}  // namespace

std::optional<std::size_t> minimal_afar_height(std::size_t k, std::size_t max_height) {
  if (k < 2) throw InvalidInput("minimal_afar_height: k must be at least 2");
  for (std::size_t h = 1; h <= max_height; ++h) {
    if (ipow(k, h) > 4096) break;
    DoubleTree t = double_tree(k, h);
    if (select_afar_leaves(t.graph, all_leaves(t.params), k, 2 * k)) return h;
  }
  return std::nullopt;
}

Visage k_connected_visage(std::size_t k, std::size_t h, std::size_t overhead_path_len) {
  if (k < 2) throw InvalidInput("k_connected_visage: k must be at least 2");
  if (overhead_path_len < 1) throw InvalidInput("k_connected_visage: overhead paths need at least one vertex");
  DoubleTree proto = double_tree(k, h);
  auto afar = select_afar_leaves(proto.graph, all_leaves(proto.params), k, 2 * k);
  if (!afar)
    throw InvalidInput("k_connected_visage: height " + std::to_string(h) + " has no " + std::to_string(k) +
                       " afar leaves");
  Visage out;
  auto& p = out.params;
  p.variant = VisageVariant::KConnected;
  p.scale = k;
  p.k = k;
  p.height = h;
  GraphBuilder b;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex first = b.add_vertices(overhead_path_len);
    for (std::size_t j = 0; j < overhead_path_len; ++j) {
      p.overhead.push_back(first + static_cast<Vertex>(j));
      if (j + 1 < overhead_path_len) b.add_edge(first + j, first + j + 1);
    }
  }
  for (std::size_t i = 0; i < k; ++i) p.box.push_back(b.add_vertex("box_" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < k; ++i) p.cross.push_back(b.add_vertex("cross_" + std::to_string(i + 1)));
  for (Vertex o : p.overhead) {
    for (Vertex x : p.box) b.add_edge(o, x);
    for (Vertex x : p.cross) b.add_edge(o, x);
  }
  std::vector<std::pair<Vertex, Vertex>> roots;
  for (std::size_t t = 0; t < kNecklaceTrees; ++t) {
    Vertex off = b.embed(proto.graph, "tree" + std::to_string(t) + "_");
    for (Vertex v = 0; v < proto.graph.vertex_count(); ++v) p.arena.push_back(off + v);
    roots.emplace_back(off + proto.params.upper_root, off + proto.params.lower_root);
    const auto& group = t % 2 == 0 ? p.box : p.cross;
    auto& attachments = t % 2 == 0 ? p.box_attachments : p.cross_attachments;
    for (std::size_t i = 0; i < k; ++i) {
      b.add_edge(off + (*afar)[i], group[i]);
      attachments.push_back(off + (*afar)[i]);
    }
  }
  for (std::size_t t = 0; t < kNecklaceTrees; ++t) b.add_edge(roots[t].second, roots[(t + 1) % kNecklaceTrees].first);
  out.graph = b.build();
  return out;
}

}  // namespace tron
