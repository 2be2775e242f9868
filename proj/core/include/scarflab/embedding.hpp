#ifndef SCARFLAB_EMBEDDING_HPP
#define SCARFLAB_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab {

inline constexpr int kDefaultEmbeddingCap = 16;

/// An injective map from V(pattern) into V(host); image[i] hosts pattern vertex i.
std::optional<std::vector<int>> find_induced_embedding(const Graph& host, const Graph& pattern,
                                                        int cap = kDefaultEmbeddingCap);
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                         int cap = kDefaultEmbeddingCap);

/// H appears in G as an induced subgraph.
bool contains_induced(const Graph& g, const Graph& h, int cap = kDefaultEmbeddingCap);
/// H appears in G as a (not necessarily induced) subgraph.
bool contains_subgraph(const Graph& g, const Graph& h, int cap = kDefaultEmbeddingCap);

}  // namespace scarflab

#endif  // SCARFLAB_EMBEDDING_HPP
