#ifndef SCARFLAB_COMPLEX_HPP
#define SCARFLAB_COMPLEX_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "scarflab/monomial.hpp"

namespace scarflab {

inline constexpr int kMaxGenerators = 256;
inline constexpr int kDefaultTaylorCap = 20;

/// A set of generator indices in [0, kMaxGenerators).
class Face {
 public:
  Face() = default;
  static Face singleton(int index);
  static Face from_indices(std::span<const int> indices);
  static Face from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }

  bool empty() const;
  int size() const;
  bool contains(int index) const { return (words_[word(index)] >> bit(index)) & 1U; }
  Face with(int index) const;
  Face without(int index) const;
  /// Largest index, or -1 for the empty face.
  int max_index() const;
  std::vector<int> indices() const;
  bool subset_of(const Face& other) const;

  friend Face operator|(const Face& a, const Face& b);
  friend Face operator&(const Face& a, const Face& b);
  friend bool operator==(const Face&, const Face&) = default;

  std::size_t hash() const;

 private:
  static constexpr std::size_t kWords = kMaxGenerators / 64;
  static std::size_t word(int index) { return static_cast<std::size_t>(index) / 64; }
  static int bit(int index) { return index % 64; }
  std::array<std::uint64_t, kWords> words_{};
};

struct FaceHash {
  std::size_t operator()(const Face& f) const { return f.hash(); }
};

/// Canonical face order: by size, then lexicographically on sorted indices.
bool face_less(const Face& a, const Face& b);

/// A finite simplicial complex stored as its explicit, downward closed face
/// family. The void complex has no faces at all; {∅} has only the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws unless `faces` is closed under taking subsets.
  explicit SimplicialComplex(std::vector<Face> faces);
  /// Every subset of every facet.
  static SimplicialComplex from_facets(std::span<const Face> facets);

  bool is_void() const { return faces_.empty(); }
  /// True when there is at least one vertex (so the complex is not empty in
  /// the acyclicity sense).
  bool has_vertices() const { return faces_.size() > 1; }
  bool contains(const Face& f) const { return index_.contains(f); }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }

  /// Highest face dimension; -1 for {∅}, -2 for the void complex.
  int dimension() const;
  /// f[i] = number of i-dimensional faces, i >= 0.
  std::vector<std::size_t> f_vector() const;
  std::vector<Face> faces_of_dimension(int dim) const;
  Face vertex_set() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.faces_ == b.faces_; }

 private:
  std::vector<Face> faces_;
  std::unordered_set<Face, FaceHash> index_;
};

/// Label of a face: the lcm of the generators it indexes.
Monomial face_label(const MonomialIdeal& ideal, const Face& face);

/// A simplicial complex on mingens(I) whose faces carry lcm labels.
class LabeledComplex {
 public:
  LabeledComplex(MonomialIdeal ideal, SimplicialComplex complex);

  const MonomialIdeal& ideal() const { return ideal_; }
  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Face>& faces() const { return complex_.faces(); }
  /// Labels parallel to faces().
  const std::vector<Monomial>& labels() const { return labels_; }
  Monomial label(const Face& f) const { return face_label(ideal_, f); }

 private:
  MonomialIdeal ideal_;
  SimplicialComplex complex_;
  std::vector<Monomial> labels_;
};

/// Full simplex on the generators; refuses more than `max_generators`.
LabeledComplex taylor_complex(const MonomialIdeal& ideal, int max_generators = kDefaultTaylorCap);

/// Faces with globally unique lcm labels. Found level by level: a set of
/// generators is a Scarf face iff no outside generator divides its lcm and
/// each member contributes a variable no other member has.
LabeledComplex scarf_complex(const MonomialIdeal& ideal);

/// Δ≤m: faces whose labels divide m.
LabeledComplex restrict_complex(const LabeledComplex& complex, Monomial m);

/// All lcms of nonempty generator subsets, ascending. 1 is not included.
struct LcmLattice {
  std::vector<Monomial> points;
  Monomial top;
};
LcmLattice lcm_lattice(const MonomialIdeal& ideal, int max_variables = kDefaultVariableCap);

/// {τ ∈ Δ : σ ∪ τ ∈ Δ}; σ must be a face.
SimplicialComplex star(const SimplicialComplex& complex, const Face& sigma);
/// Δ ∪ {τ ∪ {apex}}; the apex must not already be a vertex.
SimplicialComplex cone(int apex, const SimplicialComplex& complex);

}  // namespace scarflab

#endif  // SCARFLAB_COMPLEX_HPP
