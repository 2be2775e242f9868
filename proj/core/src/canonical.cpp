#include "scarflab/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "scarflab/graph_io.hpp"

namespace scarflab {
namespace {

using Coloring = std::vector<int>;

// Ranks colours so that they are 0..k-1 and order-preserving.
int normalize(Coloring& colors) {
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int& c : colors) c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
  return static_cast<int>(distinct.size());
}

// Colour refinement until stable. Signatures are ordered canonically, so the
// result commutes with graph isomorphisms.
void refine(const Graph& g, Coloring& colors) {
  int classes = normalize(colors);
  const int n = g.n();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colors[static_cast<std::size_t>(v)]};
      std::vector<int> nbr;
      for (int u : mask_to_vertices(g.neighbors(v))) nbr.push_back(colors[static_cast<std::size_t>(u)]);
      std::sort(nbr.begin(), nbr.end());
      sig.insert(sig.end(), nbr.begin(), nbr.end());
      sigs[static_cast<std::size_t>(v)] = {std::move(sig), v};
    }
    std::map<std::vector<int>, int> rank;
    for (auto& [sig, v] : sigs) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (auto& [sig, v] : sigs) colors[static_cast<std::size_t>(v)] = rank[sig];
    if (next == classes) return;
    classes = next;
  }
}

bool are_twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~vertex_bit(v)) == (g.neighbors(v) & ~vertex_bit(u));
}

struct Search {
  const Graph& g;
  std::optional<std::vector<VertexMask>> best_rows;
  std::vector<int> best_perm;

  void leaf(const Coloring& colors) {
    const int n = g.n();
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      VertexMask row = 0;
      for (int u : mask_to_vertices(g.neighbors(v))) row |= vertex_bit(colors[static_cast<std::size_t>(u)]);
      rows[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = row;
    }
    if (!best_rows || rows > *best_rows) {
      best_rows = std::move(rows);
      best_perm = colors;
    }
  }

  void run(Coloring colors) {
    refine(g, colors);
    const int n = g.n();
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> representatives;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      bool covered = std::any_of(representatives.begin(), representatives.end(),
                                 [&](int r) { return are_twins(g, r, v); });
      if (!covered) representatives.push_back(v);
    }
    for (int v : representatives) {
      Coloring next(colors.size());
      for (std::size_t u = 0; u < colors.size(); ++u) next[u] = 2 * colors[u] + 1;
      next[static_cast<std::size_t>(v)] = 2 * colors[static_cast<std::size_t>(v)];
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error("canonical form cap exceeded: " + std::to_string(g.n()) + " > " + std::to_string(cap));
  }
  if (g.n() == 0) return {};
  Search search{g, std::nullopt, {}};
  Coloring start(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) start[static_cast<std::size_t>(v)] = g.degree(v);
  search.run(std::move(start));
  return search.best_perm;
}

Graph canonical_graph(const Graph& g, int cap) {
  auto perm = canonical_labeling(g, cap);
  return relabel(g, perm);
}

CanonicalForm canonical_form(const Graph& g, int cap) { return {to_graph6(canonical_graph(g, cap))}; }

bool are_isomorphic(const Graph& a, const Graph& b, int cap) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, cap) == canonical_form(b, cap);
}

}  // namespace scarflab
