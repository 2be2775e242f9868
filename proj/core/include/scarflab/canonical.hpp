#ifndef SCARFLAB_CANONICAL_HPP
#define SCARFLAB_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab {

inline constexpr int kDefaultCanonicalCap = 10;

/// Isomorphism-invariant label: the graph6 encoding of the canonically
/// relabeled graph. Two graphs get equal forms iff they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Permutation p with relabel(g, p) canonical. Individualization-refinement
/// over colour classes; twins inside a cell are explored once.
std::vector<int> canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap);

CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g, int cap = kDefaultCanonicalCap);

bool are_isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

}  // namespace scarflab

#endif  // SCARFLAB_CANONICAL_HPP
