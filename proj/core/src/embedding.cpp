#include "scarflab/embedding.hpp"

#include <algorithm>

namespace scarflab {
namespace {

struct Matcher {
  const Graph& host;
  const Graph& pattern;
  bool induced;
  std::vector<int> order;  // pattern vertices, each (after the first) adjacent to an earlier one where possible
  std::vector<int> image;

  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    for (int h = 0; h < host.n(); ++h) {
      if ((used >> h) & 1U) continue;
      if (host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int q = order[k];
        const bool pattern_edge = pattern.has_edge(p, q);
        const bool host_edge = host.has_edge(h, image[static_cast<std::size_t>(q)]);
        if (pattern_edge && !host_edge) ok = false;
        if (induced && !pattern_edge && host_edge) ok = false;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(p)] = h;
      if (extend(depth + 1, used | vertex_bit(h))) return true;
    }
    return false;
  }
};

std::vector<int> search_order(const Graph& pattern) {
  std::vector<int> order;
  VertexMask placed = 0;
  const int n = pattern.n();
  while (static_cast<int>(order.size()) < n) {
    // Prefer a vertex adjacent to what is placed; break ties by degree.
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const bool attached = (pattern.neighbors(v) & placed) != 0;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const bool pick_attached = (pattern.neighbors(pick) & placed) != 0;
      if (attached != pick_attached) {
        if (attached) pick = v;
      } else if (pattern.degree(v) > pattern.degree(pick)) {
        pick = v;
      }
    }
    order.push_back(pick);
    placed |= vertex_bit(pick);
  }
  return order;
}

std::optional<std::vector<int>> find_embedding(const Graph& host, const Graph& pattern, bool induced, int cap) {
  if (host.n() > cap) throw Error("embedding search cap exceeded: " + std::to_string(host.n()) + " vertices");
  if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  Matcher m{host, pattern, induced, search_order(pattern), std::vector<int>(static_cast<std::size_t>(pattern.n()), -1)};
  if (!m.extend(0, 0)) return std::nullopt;
  return m.image;
}

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern, int cap) {
  return find_embedding(host, pattern, true, cap);
}

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host, const Graph& pattern, int cap) {
  return find_embedding(host, pattern, false, cap);
}

bool contains_induced(const Graph& g, const Graph& h, int cap) { return find_induced_embedding(g, h, cap).has_value(); }

bool contains_subgraph(const Graph& g, const Graph& h, int cap) { return find_subgraph_embedding(g, h, cap).has_value(); }

}  // namespace scarflab
