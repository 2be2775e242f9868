#include "scarflab/enumerate.hpp"

#include <algorithm>
#include <map>

#include "scarflab/canonical.hpp"
#include "scarflab/graph_io.hpp"

namespace scarflab {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw Error(std::string(what) + ": vertex count must be positive");
  if (n > cap) {
    throw Error(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
}

// Canonical form -> canonical graph, which keeps output sorted and unique.
using ClassMap = std::map<CanonicalForm, Graph>;

void insert_class(ClassMap& classes, const Graph& g, int cap) {
  auto perm = canonical_labeling(g, cap);
  Graph canon = relabel(g, perm);
  CanonicalForm form{to_graph6(canon)};
  classes.emplace(std::move(form), std::move(canon));
}

std::vector<Graph> values(const ClassMap& classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (const auto& [form, g] : classes) out.push_back(g);
  return out;
}

// Deleting any vertex of an n-vertex graph leaves an (n-1)-vertex graph, so
// extending every smaller class by a new vertex with every neighbourhood
// reaches every class.
std::vector<Graph> graphs_by_extension(int n, int cap) {
  ClassMap classes;
  if (n == 1) {
    insert_class(classes, Graph(1), cap);
    return values(classes);
  }
  for (const Graph& base : graphs_by_extension(n - 1, cap)) {
    const VertexMask limit = vertex_bit(n - 1);
    for (VertexMask nbrs = 0; nbrs < limit; ++nbrs) {
      auto rows = base.adjacency();
      rows.push_back(nbrs);
      for (int v : mask_to_vertices(nbrs)) rows[static_cast<std::size_t>(v)] |= vertex_bit(n - 1);
      insert_class(classes, Graph::from_adjacency(std::move(rows)), cap);
    }
  }
  return values(classes);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, int cap) {
  check_cap(n, cap, "graph enumeration");
  return graphs_by_extension(n, std::max(cap, n));
}

std::vector<Graph> enumerate_connected_graphs(int n, int cap) {
  auto all = enumerate_graphs(n, cap);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

std::vector<Graph> enumerate_trees(int n, int cap) {
  check_cap(n, cap, "tree enumeration");
  ClassMap classes;
  insert_class(classes, Graph(1), std::max(cap, n));
  for (int size = 2; size <= n; ++size) {
    ClassMap next;
    for (const auto& [form, tree] : classes) {
      for (int v = 0; v < tree.n(); ++v) insert_class(next, add_leaf(tree, v), std::max(cap, n));
    }
    classes = std::move(next);
  }
  return values(classes);
}

}  // namespace scarflab
