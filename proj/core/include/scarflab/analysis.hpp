#ifndef SCARFLAB_ANALYSIS_HPP
#define SCARFLAB_ANALYSIS_HPP

#include <optional>
#include <span>
#include <vector>

#include "scarflab/canonical.hpp"
#include "scarflab/families.hpp"
#include "scarflab/graph.hpp"
#include "scarflab/ideal_builders.hpp"
#include "scarflab/leaf_gluing.hpp"
#include "scarflab/scarf.hpp"

namespace scarflab {

// ---- two-generator lemma -------------------------------------------------

struct TwoGeneratorCheck {
  int t = 0;
  std::size_t ideals_checked = 0;
  /// Ideals where "Scarf" and "at most two generators" disagree.
  std::vector<MonomialIdeal> counterexamples;

  bool holds() const { return counterexamples.empty(); }
};

/// Every nonzero ideal generated by degree-t square-free monomials in t+1
/// variables is Scarf iff it has at most two generators. 2 <= t <= 5.
TwoGeneratorCheck check_two_generator_lemma(int t, std::span<const FieldSpec> fields);

// ---- classification predicates -------------------------------------------

/// C_t(G) is Scarf iff |V(G)| <= t or G is a path on at most 2t vertices.
/// Requires a connected graph and t >= 3.
bool classify_theorem_A(const Graph& g, int t);
/// P_4(G) is Scarf iff |V(G)| <= 4 or G is one of T_k, S_k, S_3^{m,n},
/// S_4^{m,n}, S_5^{m,n,p}, S_6^{m,n,p}. Requires a connected graph.
bool classify_theorem_B(const Graph& g);

/// The theorem governing `spec`: A for C_t (t >= 3) and P_3, B for P_4.
/// Throws for specs no theorem covers.
bool predict_scarf(const Graph& g, const IdealSpec& spec);
bool has_prediction(const IdealSpec& spec);

// ---- paths and cycles ----------------------------------------------------

struct PathCycleRow {
  int r = 0;
  bool path_scarf = false;
  bool cycle_scarf = false;
  std::size_t path_generators = 0;
  std::size_t cycle_generators = 0;
  /// Scarf(C_t(P_r)) is a path on its generators (checked for t+2 <= r <= 2t).
  std::optional<bool> path_is_path_complex;
  /// Scarf(C_t(P_r)) is the boundary of a (t+2)-gon (checked for r = 2t+1).
  std::optional<bool> path_is_polygon;
};

struct PathCycleTable {
  int t = 0;
  std::vector<PathCycleRow> rows;
};

/// Direct Scarf verdicts for C_t(P_r) and C_t(C_r), 3 <= r <= r_max.
PathCycleTable check_paths_cycles(int t, int r_max, std::span<const FieldSpec> fields);

/// Complex on vertices 0..k-1 with edges {i, i+1} only.
bool is_path_complex(const SimplicialComplex& complex, int k);
/// Boundary of the k-gon on 0..k-1 with edges {i, i+1} and {0, k-1}.
bool is_polygon_boundary(const SimplicialComplex& complex, int k);

// ---- restriction lemma ---------------------------------------------------

struct RestrictionCheck {
  bool applicable = false;  // I is Scarf
  std::size_t points_checked = 0;
  std::vector<Monomial> violations;

  bool ok() const { return violations.empty(); }
};

/// When I is Scarf, every restriction I≤m is Scarf. `sample` defaults to
/// every lcm lattice point when empty.
RestrictionCheck verify_restriction_lemma(const MonomialIdeal& ideal, std::span<const Monomial> sample,
                                          std::span<const FieldSpec> fields);

// ---- leaf lemma ----------------------------------------------------------

struct LeafLemmaReport {
  int x = 0;
  /// No face of Γ contains two of the generators x·n_j.
  bool hypothesis = false;
  /// Stronger reading: stars of distinct x·n_j share no nonempty face.
  bool strong_hypothesis = false;

  std::optional<LeafGluing> gluing;
  /// Faces of Γ′ computed directly, and Γ′ predicted by cone replacement.
  std::optional<SimplicialComplex> glued_scarf;
  /// (i) Γ′ = Γ ∪ ⋃_j cone(x′n_j, star(xn_j, Γ)).
  bool cone_replacement = false;
  /// (ii) star(xn_j, Γ′) = cone(x′n_j, star(xn_j, Γ)) and no face of Γ′
  /// holds two distinct x·n_j.
  bool star_is_cone = false;
  bool stars_stay_disjoint = false;
  /// {xn_i, xn_j}, {x′n_i, x′n_j}, {xn_i, x′n_j} are never faces of Γ′.
  bool forbidden_pairs_absent = false;
  /// Faces over M agree in Γ and Γ′, and bar(N′) ∈ Γ for every N′ ∈ Γ′.
  bool face_transfer = false;
  bool source_scarf = false;
  bool glued_scarf_verdict = false;
  /// (iii) source Scarf implies glued Scarf.
  bool scarf_transfer = false;

  /// Hypothesis held and every conclusion checked out.
  bool all_hold() const;
};

/// Checks the hypothesis at variable x and, when it holds, every conclusion
/// of the leaf lemma for the glued ideal. Throws when x divides no generator.
LeafLemmaReport leaf_lemma_pipeline(const MonomialIdeal& ideal, int x, std::span<const FieldSpec> fields);

// ---- obstructions --------------------------------------------------------

enum class Containment { Induced, Subgraph };

const char* to_string(Containment mode);
Containment parse_containment(std::string_view text);

struct ObstructionOptions {
  Containment mode = Containment::Induced;
  /// Restrict candidates to trees (enumerated by leaf addition).
  bool trees_only = false;
  int jobs = 1;
  /// Largest n accepted; defaults to 7 for graphs and 10 for trees.
  std::optional<int> n_cap;
};

struct ObstructionCatalog {
  IdealSpec spec;
  int n = 0;
  Containment mode = Containment::Induced;
  bool trees_only = false;
  std::size_t graphs_examined = 0;
  /// Canonically labeled, sorted by (vertex count, edge count, canonical form).
  std::vector<Graph> graphs;
};

/// Connected graphs (or trees) on at most n vertices that are not Scarf for
/// `spec` but contain no smaller non-Scarf graph in the chosen order.
ObstructionCatalog derive_obstructions(const IdealSpec& spec, int n, const ObstructionOptions& options,
                                       std::span<const FieldSpec> fields);

// ---- sweeps --------------------------------------------------------------

struct SweepRecord {
  Graph graph;
  CanonicalForm form;
  FamilyTag family;
  std::size_t generator_count = 0;
  bool predicted = false;
  bool computed = false;
  bool agree = false;
  bool field_disagreement = false;
};

struct SweepOptions {
  int jobs = 1;
  /// Largest n_max accepted.
  int n_cap = 7;
};

/// Every connected graph on 1..n_max vertices, one per isomorphism class,
/// sorted by canonical form.
std::vector<SweepRecord> sweep(const IdealSpec& spec, int n_max, std::span<const FieldSpec> fields,
                               const SweepOptions& options = {});

}  // namespace scarflab

#endif  // SCARFLAB_ANALYSIS_HPP
