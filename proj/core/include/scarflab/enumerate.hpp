#ifndef SCARFLAB_ENUMERATE_HPP
#define SCARFLAB_ENUMERATE_HPP

#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab {

inline constexpr int kDefaultConnectedEnumerationCap = 7;
inline constexpr int kDefaultTreeEnumerationCap = 10;

// All enumerators return canonically labeled representatives, one per
// isomorphism class, sorted by canonical form.

/// Every simple graph on n vertices (connected or not).
std::vector<Graph> enumerate_graphs(int n, int cap = kDefaultConnectedEnumerationCap);

std::vector<Graph> enumerate_connected_graphs(int n, int cap = kDefaultConnectedEnumerationCap);

std::vector<Graph> enumerate_trees(int n, int cap = kDefaultTreeEnumerationCap);

}  // namespace scarflab

#endif  // SCARFLAB_ENUMERATE_HPP
