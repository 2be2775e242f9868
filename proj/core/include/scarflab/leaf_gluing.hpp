#ifndef SCARFLAB_LEAF_GLUING_HPP
#define SCARFLAB_LEAF_GLUING_HPP

#include <vector>

#include "scarflab/complex.hpp"
#include "scarflab/monomial.hpp"

namespace scarflab {

/// The pair (I, I') where mingens(I) = {m_1..m_p} ∪ {x·n_1..x·n_q} and
/// mingens(I') adds x'·n_1..x'·n_q for a fresh variable x'.
struct LeafGluing {
  MonomialIdeal source;
  MonomialIdeal glued;
  int x = 0;
  int x_prime = 0;
  /// source generator index -> glued generator index
  std::vector<int> source_to_glued;
  /// For each j: index of x·n_j in the source, and of x·n_j / x'·n_j in the glued ideal.
  struct Pair {
    int source_xn;
    int glued_xn;
    int glued_xpn;
  };
  std::vector<Pair> pairs;

  /// Embeds a face over source generators into glued generator indices.
  Face lift(const Face& source_face) const;
  /// glued generator index -> source generator index under x' -> x.
  int bar_index(int glued_index) const;
};

/// Appends x' (named after x with a trailing apostrophe) and adds x'·n_j for
/// every generator x·n_j. Throws when x divides no generator.
LeafGluing glue_leaf_ideal(const MonomialIdeal& ideal, int x);

/// Image of a face of the glued ideal under x' -> x, deduplicated.
Face evaluate_bar(const LeafGluing& gluing, const Face& glued_face);

}  // namespace scarflab

#endif  // SCARFLAB_LEAF_GLUING_HPP
