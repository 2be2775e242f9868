#include "scarflab/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace scarflab {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxGraphVertices) {
    throw Error("graph size " + std::to_string(n) + " outside [0, " + std::to_string(kMaxGraphVertices) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::from_adjacency(std::vector<VertexMask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    if (rows[static_cast<std::size_t>(u)] & ~g.all_vertices()) throw Error("adjacency row references missing vertex");
    if ((rows[static_cast<std::size_t>(u)] >> u) & 1U) throw Error("loop at vertex " + std::to_string(u));
    for (int v : mask_to_vertices(rows[static_cast<std::size_t>(u)])) {
      if (!((rows[static_cast<std::size_t>(v)] >> u) & 1U)) throw Error("adjacency rows are not symmetric");
    }
  }
  g.adj_ = std::move(rows);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) {
    throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  }
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

VertexMask Graph::all_vertices() const {
  return n() == 64 ? ~VertexMask{0} : vertex_bit(n()) - 1;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : mask_to_vertices(neighbors(u) >> (u + 1))) out.push_back({u, v + u + 1});
  }
  return out;
}

std::vector<int> mask_to_vertices(VertexMask mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw Error("induced subgraph needs a nonempty vertex set");
  std::vector<int> original(vertices.begin(), vertices.end());
  std::sort(original.begin(), original.end());
  if (std::adjacent_find(original.begin(), original.end()) != original.end()) {
    throw Error("duplicate vertex in induced subgraph selection");
  }
  if (original.front() < 0 || original.back() >= g.n()) throw Error("induced subgraph vertex out of range");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (std::size_t j = i + 1; j < original.size(); ++j) {
      if (g.has_edge(original[i], original[j])) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices) {
  auto list = mask_to_vertices(vertices);
  return induced_subgraph(g, std::span<const int>(list));
}

bool is_connected_set(const Graph& g, VertexMask vertices) {
  if (vertices == 0) return false;
  VertexMask seen = vertices & (~vertices + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (int v : mask_to_vertices(frontier)) next |= g.neighbors(v);
    next &= vertices & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == vertices;
}

bool is_connected(const Graph& g) { return g.n() > 0 && is_connected_set(g, g.all_vertices()); }

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n() - 1; }

namespace {

// Connected sets containing `root` as their smallest vertex, grown through an
// extension frontier so every set is produced exactly once.
void extend_connected(const Graph& g, int k, VertexMask current, VertexMask extension, VertexMask forbidden,
                      std::vector<VertexMask>& out) {
  if (std::popcount(current) == k) {
    out.push_back(current);
    return;
  }
  while (extension != 0) {
    const int w = std::countr_zero(extension);
    extension &= extension - 1;
    const VertexMask fresh = g.neighbors(w) & ~current & ~forbidden & ~extension;
    extend_connected(g, k, current | vertex_bit(w), extension | fresh, forbidden | vertex_bit(w), out);
    forbidden |= vertex_bit(w);
  }
}

}  // namespace

std::vector<VertexMask> connected_induced_masks(const Graph& g, int k) {
  if (k < 1 || k > g.n()) {
    throw Error("subset size " + std::to_string(k) + " outside [1, " + std::to_string(g.n()) + "]");
  }
  std::vector<VertexMask> out;
  for (int root = 0; root < g.n(); ++root) {
    const VertexMask below = vertex_bit(root) - 1;
    const VertexMask forbidden = below | vertex_bit(root);
    extend_connected(g, k, vertex_bit(root), g.neighbors(root) & ~forbidden, forbidden, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<int>> masks_to_sorted_lists(const std::vector<VertexMask>& masks) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (VertexMask m : masks) out.push_back(mask_to_vertices(m));
  std::sort(out.begin(), out.end());
  return out;
}

void extend_path(const Graph& g, int t, int last, VertexMask used, int length, std::set<VertexMask>& out) {
  if (length == t) {
    out.insert(used);
    return;
  }
  for (int w : mask_to_vertices(g.neighbors(last) & ~used)) extend_path(g, t, w, used | vertex_bit(w), length + 1, out);
}

}  // namespace

std::vector<std::vector<int>> connected_induced_subsets(const Graph& g, int k) {
  return masks_to_sorted_lists(connected_induced_masks(g, k));
}

std::vector<VertexMask> path_vertex_masks(const Graph& g, int t) {
  if (t < 1) throw Error("path length must be positive");
  std::set<VertexMask> found;
  if (t > g.n()) return {};
  for (int v = 0; v < g.n(); ++v) extend_path(g, t, v, vertex_bit(v), 1, found);
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> path_vertex_sets(const Graph& g, int t) {
  return masks_to_sorted_lists(path_vertex_masks(g, t));
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw Error("diameter requires a connected graph");
  int best = 0;
  for (int s = 0; s < g.n(); ++s) {
    VertexMask seen = vertex_bit(s);
    VertexMask frontier = seen;
    int depth = 0;
    while (true) {
      VertexMask next = 0;
      for (int v : mask_to_vertices(frontier)) next |= g.neighbors(v);
      next &= ~seen;
      if (next == 0) break;
      seen |= next;
      frontier = next;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

std::vector<int> removable_vertices(const Graph& g) {
  std::vector<int> out;
  if (g.n() <= 1) return out;
  for (int v = 0; v < g.n(); ++v) {
    if (is_connected_set(g, g.all_vertices() & ~vertex_bit(v))) out.push_back(v);
  }
  return out;
}

Graph add_leaf(const Graph& g, int attach) {
  if (attach < 0 || attach >= g.n()) throw Error("leaf attachment vertex out of range");
  auto edges = g.edges();
  edges.push_back({attach, g.n()});
  return Graph(g.n() + 1, edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw Error("permutation size mismatch");
  VertexMask image = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n() || (image & vertex_bit(p))) throw Error("relabeling is not a permutation");
    image |= vertex_bit(p);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = perm[static_cast<std::size_t>(e.u)];
    int b = perm[static_cast<std::size_t>(e.v)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.n(), edges);
}

}  // namespace scarflab
