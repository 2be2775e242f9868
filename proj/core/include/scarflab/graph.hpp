#ifndef SCARFLAB_GRAPH_HPP
#define SCARFLAB_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "scarflab/monomial.hpp"

namespace scarflab {

inline constexpr int kMaxGraphVertices = 64;

/// Vertex subset as a bitmask over [0, n).
using VertexMask = std::uint64_t;

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices [0, n).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexMask> rows);

  int n() const { return static_cast<int>(adj_.size()); }
  VertexMask all_vertices() const;
  VertexMask neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  int max_degree() const;
  const std::vector<VertexMask>& adjacency() const { return adj_; }

  /// Canonical edge list: each pair sorted, list sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edge(int u, int v);
  std::vector<VertexMask> adj_;
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
InducedSubgraph induced_subgraph(const Graph& g, VertexMask vertices);

bool is_connected(const Graph& g);
/// Whether the subgraph induced on `vertices` is connected; the empty set is not.
bool is_connected_set(const Graph& g, VertexMask vertices);
bool is_tree(const Graph& g);

/// All k-subsets inducing a connected subgraph, as sorted masks.
std::vector<VertexMask> connected_induced_masks(const Graph& g, int k);
/// Same sets as sorted vertex lists, in lexicographic order.
std::vector<std::vector<int>> connected_induced_subsets(const Graph& g, int k);

/// Distinct vertex sets of simple paths on t vertices.
std::vector<VertexMask> path_vertex_masks(const Graph& g, int t);
std::vector<std::vector<int>> path_vertex_sets(const Graph& g, int t);

int diameter(const Graph& g);

/// Vertices v for which G - v is connected.
std::vector<int> removable_vertices(const Graph& g);

/// G with a new vertex n adjacent to `attach`.
Graph add_leaf(const Graph& g, int attach);

/// Relabels by perm: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<int> mask_to_vertices(VertexMask mask);

}  // namespace scarflab

#endif  // SCARFLAB_GRAPH_HPP
