#ifndef SCARFLAB_SCARF_HPP
#define SCARFLAB_SCARF_HPP

#include <optional>
#include <span>
#include <vector>

#include "scarflab/complex.hpp"
#include "scarflab/homology.hpp"
#include "scarflab/monomial.hpp"

namespace scarflab {

enum class ScarfVerdict { Scarf, NotScarf, TriviallyScarf };

const char* to_string(ScarfVerdict verdict);

/// A lattice point m whose restriction Scarf(I)≤m has nontrivial reduced homology.
struct Witness {
  Monomial point;
  HomologyProfile profile;
};

struct FieldVerdict {
  FieldSpec field;
  ScarfVerdict verdict;
  std::optional<Witness> witness;
};

struct ScarfReport {
  MonomialIdeal ideal;
  std::vector<FieldVerdict> verdicts;
  std::size_t generator_count = 0;
  std::size_t scarf_face_count = 0;
  std::size_t lattice_size = 0;

  /// Scarf (or trivially so) over every tested field.
  bool is_scarf() const;
  bool fields_agree() const;
  /// NotScarf over at least one field and Scarf over another.
  bool field_disagreement() const { return !fields_agree(); }
};

/// Decides whether Scarf(I) supports a resolution by checking acyclicity of
/// Scarf(I)≤m for every m in the lcm lattice. A restriction only depends on
/// which generators divide m, so lattice points cover every monomial. The
/// witness per field is the failing point with the smallest bit pattern.
ScarfReport is_scarf(const MonomialIdeal& ideal, std::span<const FieldSpec> fields,
                     int max_variables = kDefaultVariableCap);
ScarfReport is_scarf(const MonomialIdeal& ideal);

/// Same check against a precomputed Scarf complex of `ideal`.
ScarfReport is_scarf(const LabeledComplex& scarf, std::span<const FieldSpec> fields,
                     int max_variables = kDefaultVariableCap);

}  // namespace scarflab

#endif  // SCARFLAB_SCARF_HPP
