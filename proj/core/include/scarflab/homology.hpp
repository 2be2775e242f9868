#ifndef SCARFLAB_HOMOLOGY_HPP
#define SCARFLAB_HOMOLOGY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scarflab/complex.hpp"

namespace scarflab {

/// Coefficient field: GF(p) for a prime p, or the rationals.
class FieldSpec {
 public:
  enum class Kind { PrimeField, Rationals };

  static FieldSpec prime(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// "gf2", "gf32003", "q".
std::string to_string(const FieldSpec& field);
FieldSpec parse_field(std::string_view text);
/// Comma separated list of fields.
std::vector<FieldSpec> parse_field_list(std::string_view text);

/// {GF(2), GF(32003)}.
std::vector<FieldSpec> default_field_battery();

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  int at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// ∂_i from i-faces to (i-1)-faces, each dimension in canonical face order.
/// ∂_0 is the augmentation onto the empty face. Removing the k-th smallest
/// vertex carries sign (-1)^k.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int dim);

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);
/// Rank over Q by fraction-free (Bareiss) elimination on big integers.
std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_over(const IntMatrix& m, const FieldSpec& field);

struct HomologyProfile {
  FieldSpec field = FieldSpec::prime(2);
  /// Always 0 for a complex with a vertex.
  int reduced_minus_one = 0;
  /// betti[i] = reduced Betti number in dimension i.
  std::vector<int> betti;

  bool trivial() const;
};

/// Reduced Betti numbers; the complex must have at least one vertex.
HomologyProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

enum class Acyclicity { Empty, Acyclic, NotAcyclic };

struct AcyclicityVerdict {
  FieldSpec field;
  Acyclicity status;
  /// Present unless status is Empty.
  std::vector<int> betti;
};

/// Complexes without vertices ({∅} or void) report Empty.
std::vector<AcyclicityVerdict> is_acyclic(const SimplicialComplex& complex, std::span<const FieldSpec> fields);
AcyclicityVerdict is_acyclic(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace scarflab

#endif  // SCARFLAB_HOMOLOGY_HPP
