#include "scarflab/scarf.hpp"

#include <algorithm>

namespace scarflab {

const char* to_string(ScarfVerdict verdict) {
  switch (verdict) {
    case ScarfVerdict::Scarf: return "Scarf";
    case ScarfVerdict::NotScarf: return "NotScarf";
    case ScarfVerdict::TriviallyScarf: return "TriviallyScarf";
  }
  return "?";
}

bool ScarfReport::is_scarf() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const FieldVerdict& v) { return v.verdict != ScarfVerdict::NotScarf; });
}

bool ScarfReport::fields_agree() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [&](const FieldVerdict& v) {
    return (v.verdict == ScarfVerdict::NotScarf) == (verdicts.front().verdict == ScarfVerdict::NotScarf);
  });
}

namespace {

// A complex whose face count is 2^(vertex count) is a full simplex.
bool is_simplex(const SimplicialComplex& complex) {
  const int vertices = complex.vertex_set().size();
  return vertices < 63 && complex.size() == (std::size_t{1} << vertices);
}

}  // namespace

ScarfReport is_scarf(const LabeledComplex& scarf, std::span<const FieldSpec> fields, int max_variables) {
  if (fields.empty()) throw Error("at least one field is required");
  const MonomialIdeal& ideal = scarf.ideal();

  ScarfReport report;
  report.ideal = ideal;
  report.generator_count = ideal.size();
  report.scarf_face_count = scarf.complex().size();

  if (ideal.size() <= 1) {
    report.lattice_size = ideal.size();
    for (const FieldSpec& f : fields) report.verdicts.push_back({f, ScarfVerdict::TriviallyScarf, std::nullopt});
    return report;
  }

  const LcmLattice lattice = lcm_lattice(ideal, max_variables);
  report.lattice_size = lattice.points.size();
  for (const FieldSpec& f : fields) report.verdicts.push_back({f, ScarfVerdict::Scarf, std::nullopt});

  std::size_t open = fields.size();
  for (Monomial m : lattice.points) {
    if (open == 0) break;
    const LabeledComplex restricted = restrict_complex(scarf, m);
    if (!restricted.complex().has_vertices() || is_simplex(restricted.complex())) continue;
    for (FieldVerdict& v : report.verdicts) {
      if (v.verdict == ScarfVerdict::NotScarf) continue;
      HomologyProfile profile = reduced_betti(restricted.complex(), v.field);
      if (!profile.trivial()) {
        v.verdict = ScarfVerdict::NotScarf;
        v.witness = Witness{m, std::move(profile)};
        --open;
      }
    }
  }
  return report;
}

ScarfReport is_scarf(const MonomialIdeal& ideal, std::span<const FieldSpec> fields, int max_variables) {
  if (ideal.universe().size() > max_variables) {
    throw Error("universe of " + std::to_string(ideal.universe().size()) + " variables exceeds cap " +
                std::to_string(max_variables));
  }
  return is_scarf(scarf_complex(ideal), fields, max_variables);
}

ScarfReport is_scarf(const MonomialIdeal& ideal) {
  const auto fields = default_field_battery();
  return is_scarf(ideal, fields);
}

}  // namespace scarflab
