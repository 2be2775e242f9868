#include "scarflab/analysis.hpp"

#include <algorithm>
#include <string>

namespace scarflab {

TwoGeneratorCheck check_two_generator_lemma(int t, std::span<const FieldSpec> fields) {
  if (t < 2 || t > 5) throw Error("two-generator check supports 2 <= t <= 5");
  const int d = t + 1;
  const VariableUniverse universe = VariableUniverse::indexed(d);
  const std::uint64_t all = (std::uint64_t{1} << d) - 1;

  // The degree-t monomials in t+1 variables: drop one variable each.
  std::vector<Monomial> candidates;
  for (int v = 0; v < d; ++v) candidates.push_back(Monomial::from_bits(all & ~(std::uint64_t{1} << v)));

  TwoGeneratorCheck out;
  out.t = t;
  for (std::uint32_t subset = 0; subset < (1U << d); ++subset) {
    std::vector<Monomial> gens;
    for (int i = 0; i < d; ++i) {
      if ((subset >> i) & 1U) gens.push_back(candidates[static_cast<std::size_t>(i)]);
    }
    const MonomialIdeal ideal = minimalize(universe, gens);
    ++out.ideals_checked;
    if (is_scarf(ideal, fields).is_scarf() != (ideal.size() <= 2)) out.counterexamples.push_back(ideal);
  }
  return out;
}

namespace {

void require_connected(const Graph& g) {
  if (g.n() == 0 || !is_connected(g)) throw Error("classification needs a nonempty connected graph");
}

bool is_path_graph(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

}  // namespace

bool classify_theorem_A(const Graph& g, int t) {
  if (t < 3) throw Error("the connected-ideal classification needs t >= 3");
  require_connected(g);
  return g.n() <= t || (is_path_graph(g) && g.n() <= 2 * t);
}

bool classify_theorem_B(const Graph& g) {
  require_connected(g);
  return g.n() <= 4 || in_p4_scarf_family_list(g);
}

bool has_prediction(const IdealSpec& spec) {
  if (spec.kind == IdealKind::Connected) return spec.t >= 3;
  return spec.t == 3 || spec.t == 4;
}

bool predict_scarf(const Graph& g, const IdealSpec& spec) {
  if (!has_prediction(spec)) throw Error("no classification covers " + to_string(spec));
  // P_3 and C_3 coincide.
  if (spec.kind == IdealKind::Connected || spec.t == 3) return classify_theorem_A(g, spec.t);
  return classify_theorem_B(g);
}

bool is_path_complex(const SimplicialComplex& complex, int k) {
  std::vector<Face> facets;
  for (int i = 0; i < k; ++i) facets.push_back(i + 1 < k ? Face::from_indices({i, i + 1}) : Face::singleton(i));
  return complex == SimplicialComplex::from_facets(facets);
}

bool is_polygon_boundary(const SimplicialComplex& complex, int k) {
  if (k < 3) return false;
  std::vector<Face> facets;
  for (int i = 0; i < k; ++i) facets.push_back(Face::from_indices({i, (i + 1) % k}));
  return complex == SimplicialComplex::from_facets(facets);
}

PathCycleTable check_paths_cycles(int t, int r_max, std::span<const FieldSpec> fields) {
  if (t < 2) throw Error("t must be at least 2");
  if (r_max > kDefaultVariableCap) throw Error("r_max exceeds the variable cap");
  PathCycleTable table;
  table.t = t;
  const IdealSpec spec = IdealSpec::connected(t);
  for (int r = 3; r <= r_max; ++r) {
    PathCycleRow row;
    row.r = r;
    const MonomialIdeal path_ideal = build_ideal(make_family(FamilyTag::path(r)), spec);
    const LabeledComplex path_scarf = scarf_complex(path_ideal);
    row.path_generators = path_ideal.size();
    row.path_scarf = is_scarf(path_scarf, fields).is_scarf();
    // Generators sort as m_1 < m_2 < ..., so index order is path order.
    if (r >= t + 2 && r <= 2 * t) row.path_is_path_complex = is_path_complex(path_scarf.complex(), r - t + 1);
    if (r == 2 * t + 1) row.path_is_polygon = is_polygon_boundary(path_scarf.complex(), t + 2);

    const MonomialIdeal cycle_ideal = build_ideal(make_family(FamilyTag::cycle(r)), spec);
    row.cycle_generators = cycle_ideal.size();
    row.cycle_scarf = is_scarf(cycle_ideal, fields).is_scarf();
    table.rows.push_back(row);
  }
  return table;
}

RestrictionCheck verify_restriction_lemma(const MonomialIdeal& ideal, std::span<const Monomial> sample,
                                          std::span<const FieldSpec> fields) {
  RestrictionCheck out;
  out.applicable = is_scarf(ideal, fields).is_scarf();
  if (!out.applicable) return out;

  std::vector<Monomial> points(sample.begin(), sample.end());
  if (points.empty()) points = lcm_lattice(ideal).points;
  for (Monomial m : points) {
    ++out.points_checked;
    if (!is_scarf(restrict(ideal, m), fields).is_scarf()) out.violations.push_back(m);
  }
  return out;
}

bool LeafLemmaReport::all_hold() const {
  return hypothesis && cone_replacement && star_is_cone && stars_stay_disjoint && forbidden_pairs_absent &&
         face_transfer && scarf_transfer;
}

namespace {

SimplicialComplex lift_complex(const LeafGluing& gluing, const SimplicialComplex& complex) {
  std::vector<Face> faces;
  faces.reserve(complex.size());
  for (const Face& f : complex.faces()) faces.push_back(gluing.lift(f));
  return SimplicialComplex(std::move(faces));
}

bool shares_nonempty_face(const SimplicialComplex& a, const SimplicialComplex& b) {
  return std::any_of(a.faces().begin(), a.faces().end(), [&](const Face& f) { return !f.empty() && b.contains(f); });
}

}  // namespace

LeafLemmaReport leaf_lemma_pipeline(const MonomialIdeal& ideal, int x, std::span<const FieldSpec> fields) {
  if (x < 0 || x >= ideal.universe().size()) throw Error("leaf variable index out of range");
  LeafLemmaReport report;
  report.x = x;

  const LabeledComplex gamma_labeled = scarf_complex(ideal);
  const SimplicialComplex& gamma = gamma_labeled.complex();

  std::vector<int> xn;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (ideal.gen(i).contains(x)) xn.push_back(static_cast<int>(i));
  }
  if (xn.empty()) throw Error("variable " + ideal.universe().name(x) + " divides no generator");

  std::vector<SimplicialComplex> stars;
  for (int i : xn) stars.push_back(star(gamma, Face::singleton(i)));

  report.hypothesis = true;
  report.strong_hypothesis = true;
  for (std::size_t a = 0; a < xn.size(); ++a) {
    for (std::size_t b = a + 1; b < xn.size(); ++b) {
      if (gamma.contains(Face::from_indices({xn[a], xn[b]}))) report.hypothesis = false;
      if (shares_nonempty_face(stars[a], stars[b])) report.strong_hypothesis = false;
    }
  }
  if (!report.hypothesis) return report;

  LeafGluing gluing = glue_leaf_ideal(ideal, x);
  const LabeledComplex glued_labeled = scarf_complex(gluing.glued);
  const SimplicialComplex& glued = glued_labeled.complex();

  // (i) cone replacement
  std::vector<Face> predicted;
  for (const Face& f : gamma.faces()) predicted.push_back(gluing.lift(f));
  std::vector<SimplicialComplex> lifted_stars;
  for (std::size_t j = 0; j < gluing.pairs.size(); ++j) {
    lifted_stars.push_back(lift_complex(gluing, stars[j]));
    for (const Face& tau : lifted_stars.back().faces()) predicted.push_back(tau.with(gluing.pairs[j].glued_xpn));
  }
  report.cone_replacement = SimplicialComplex(std::move(predicted)) == glued;

  // (ii) stars in Γ′ are cones; disjointness persists
  report.star_is_cone = true;
  for (std::size_t j = 0; j < gluing.pairs.size(); ++j) {
    const auto& p = gluing.pairs[j];
    if (!glued.contains(Face::singleton(p.glued_xn)) ||
        star(glued, Face::singleton(p.glued_xn)) != cone(p.glued_xpn, lifted_stars[j])) {
      report.star_is_cone = false;
    }
  }
  report.stars_stay_disjoint = true;
  report.forbidden_pairs_absent = true;
  for (const auto& pi : gluing.pairs) {
    for (const auto& pj : gluing.pairs) {
      if (&pi == &pj) continue;
      if (glued.contains(Face::from_indices({pi.glued_xn, pj.glued_xn}))) report.stars_stay_disjoint = false;
      if (glued.contains(Face::from_indices({pi.glued_xn, pj.glued_xn})) ||
          glued.contains(Face::from_indices({pi.glued_xpn, pj.glued_xpn})) ||
          glued.contains(Face::from_indices({pi.glued_xn, pj.glued_xpn}))) {
        report.forbidden_pairs_absent = false;
      }
    }
  }

  // Face transfer between Γ and Γ′. Faces of Γ′ over M map to themselves
  // under bar, so the second test also covers "face of Γ′ ⇒ face of Γ".
  report.face_transfer = std::all_of(gamma.faces().begin(), gamma.faces().end(),
                                     [&](const Face& f) { return glued.contains(gluing.lift(f)); }) &&
                         std::all_of(glued.faces().begin(), glued.faces().end(), [&](const Face& f) {
                           return gamma.contains(evaluate_bar(gluing, f));
                         });

  report.source_scarf = is_scarf(gamma_labeled, fields).is_scarf();
  report.glued_scarf_verdict = is_scarf(glued_labeled, fields).is_scarf();
  report.scarf_transfer = !report.source_scarf || report.glued_scarf_verdict;
  report.glued_scarf = glued;
  report.gluing = std::move(gluing);
  return report;
}

}  // namespace scarflab
