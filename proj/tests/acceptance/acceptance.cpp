// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "scarflab/analysis.hpp"
#include "scarflab/embedding.hpp"
#include "scarflab/enumerate.hpp"
#include "scarflab/graph_io.hpp"
#include "scarflab/json_io.hpp"

using namespace scarflab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

// Every ideal touched by criteria 1-6, replayed against the oracles in 8.
std::map<std::pair<int, std::vector<std::uint64_t>>, MonomialIdeal> corpus;

MonomialIdeal remember(MonomialIdeal ideal) {
  std::vector<std::uint64_t> bits;
  for (Monomial g : ideal.gens()) bits.push_back(g.bits());
  corpus.emplace(std::make_pair(ideal.universe().size(), std::move(bits)), ideal);
  return ideal;
}

const std::vector<FieldSpec> kBattery{FieldSpec::prime(2), FieldSpec::prime(32003)};
const std::vector<FieldSpec> kWithQ{FieldSpec::prime(2), FieldSpec::prime(32003), FieldSpec::rationals()};

Graph fam(const FamilyTag& tag) { return make_family(tag); }

std::vector<std::size_t> padded(std::vector<std::size_t> f, std::size_t size) {
  f.resize(std::max(f.size(), size), 0);
  return f;
}

std::vector<Graph> connected_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<int> betti_of(const ScarfReport& r, const FieldSpec& field) {
  for (const auto& v : r.verdicts) {
    if (v.field == field && v.witness) return v.witness->profile.betti;
  }
  return {};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_1() {
  Outcome o;
  const auto p6 = remember(build_ideal(fam(FamilyTag::path(6)), IdealSpec::connected(3)));
  std::vector<std::string> gens;
  for (Monomial g : p6.gens()) gens.push_back(to_string(g, p6.universe()));
  o.require(gens == std::vector<std::string>{"x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x4*x5*x6"}, "P6 generators");
  o.require(padded(scarf_complex(p6).complex().f_vector(), 3) == std::vector<std::size_t>{4, 3, 0}, "P6 f-vector");
  o.require(is_scarf(p6, kWithQ).is_scarf(), "P6 Scarf");

  const auto p7 = remember(build_ideal(fam(FamilyTag::path(7)), IdealSpec::connected(3)));
  o.require(p7.size() == 5, "P7 has 5 generators");
  o.require(padded(scarf_complex(p7).complex().f_vector(), 3) == std::vector<std::size_t>{5, 5, 0}, "P7 f-vector");
  const auto report = is_scarf(p7, kWithQ);
  o.require(!report.is_scarf() && report.fields_agree(), "P7 NotScarf over every field");
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::rationals()}) {
    const auto b = betti_of(report, f);
    o.require(b.size() >= 2 && b[1] == 1, "P7 reduced b1 = 1 over " + to_string(f));
  }
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (int r = 3; r <= 10; ++r) {
    remember(build_ideal(fam(FamilyTag::path(r)), IdealSpec::connected(3)));
    remember(build_ideal(fam(FamilyTag::path(r)), IdealSpec::connected(4)));
    remember(build_ideal(fam(FamilyTag::cycle(r)), IdealSpec::connected(3)));
    remember(build_ideal(fam(FamilyTag::cycle(r)), IdealSpec::connected(4)));
  }
  const auto t3 = check_paths_cycles(3, 9, kBattery);
  for (const auto& row : t3.rows) {
    o.require(row.path_scarf == (row.r <= 6), "C3(P" + std::to_string(row.r) + ")");
    if (row.r >= 4 && row.r <= 8) o.require(!row.cycle_scarf, "C3(C" + std::to_string(row.r) + ") NotScarf");
    if (row.r == 7) o.require(row.path_is_polygon.value_or(false), "Scarf(C3(P7)) is a pentagon");
  }
  const auto t4 = check_paths_cycles(4, 10, kBattery);
  for (const auto& row : t4.rows) {
    o.require(row.path_scarf == (row.r <= 8), "C4(P" + std::to_string(row.r) + ")");
    if (row.r <= 9) o.require(row.cycle_scarf == (row.r <= 4), "C4(C" + std::to_string(row.r) + ")");
    if (row.r == 9) o.require(row.path_is_polygon.value_or(false), "Scarf(C4(P9)) is a hexagon");
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  std::size_t checked = 0;
  for (int t : {3, 4}) {
    for (const Graph& g : connected_up_to(6)) {
      const auto report = is_scarf(remember(build_ideal(g, IdealSpec::connected(t))), kWithQ);
      o.require(report.fields_agree(), "field agreement on " + to_graph6(g));
      o.require(classify_theorem_A(g, t) == report.is_scarf(), "t=" + std::to_string(t) + " on " + to_graph6(g));
      ++checked;
    }
  }
  o.note(std::to_string(checked) + " (graph, t) pairs");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto five = enumerate_connected_graphs(5);
  const auto non_trees = std::count_if(five.begin(), five.end(), [](const Graph& g) { return !is_tree(g); });
  o.require(non_trees == 18, "18 connected non-tree classes on 5 vertices (got " + std::to_string(non_trees) + ")");
  int scarf_non_trees = 0;
  for (const Graph& g : five) {
    const bool computed = is_scarf(remember(build_ideal(g, IdealSpec::path(4))), kBattery).is_scarf();
    o.require(classify_theorem_B(g) == computed, "5-vertex " + to_graph6(g));
    if (!is_tree(g) && computed) {
      ++scarf_non_trees;
      o.require(are_isomorphic(g, fam(FamilyTag::triangle(2))), "Scarf non-tree is T2");
    }
  }
  o.require(scarf_non_trees == 1, "exactly one Scarf non-tree on 5 vertices");

  std::size_t disagreements = 0;
  for (const Graph& g : connected_up_to(6)) {
    const auto report = is_scarf(remember(build_ideal(g, IdealSpec::path(4))), kWithQ);
    o.require(report.fields_agree(), "field agreement on " + to_graph6(g));
    disagreements += classify_theorem_B(g) == report.is_scarf() ? 0 : 1;
  }
  o.require(disagreements == 0, "extended suite on <= 6 vertices");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (int t : {3, 4}) {
    const auto check = check_two_generator_lemma(t, kWithQ);
    o.require(check.holds(), "t=" + std::to_string(t));
    o.require(check.ideals_checked == (std::size_t{1} << (t + 1)), "all generator subsets for t=" + std::to_string(t));
  }
  return o;
}

// Grows the family one middle leaf at a time, checking the leaf lemma and the
// graph-side picture at each step.
void grow(Outcome& o, const char* name, const std::function<FamilyTag(int)>& tag, int middle_leaf, int last) {
  for (int n = 1; n < last; ++n) {
    const Graph g = fam(tag(n));
    const auto ideal = remember(build_ideal(g, IdealSpec::path(4)));
    const auto report = leaf_lemma_pipeline(ideal, middle_leaf, kBattery);
    const std::string step = std::string(name) + " step " + std::to_string(n);
    o.require(report.hypothesis, step + " hypothesis");
    o.require(report.all_hold(), step + " conclusions (i)-(iii)");
    if (!report.gluing) continue;

    const Graph next = fam(tag(n + 1));
    const Graph twin = add_leaf(g, 2);
    o.require(are_isomorphic(twin, next, 16), step + " twin leaf gives the next family member");
    const auto direct = remember(build_ideal(twin, IdealSpec::path(4)));
    o.require(direct.gens() == report.gluing->glued.gens(), step + " glued ideal is the next path ideal");
    const bool bps = is_scarf(direct, kBattery).is_scarf();
    o.require(bps && bps == report.glued_scarf_verdict, step + " direct check agrees");
  }
}

Outcome criterion_6() {
  Outcome o;
  const auto base = remember(build_ideal(fam(FamilyTag::spider5(1, 1, 1)), IdealSpec::path(4)));
  const auto scarf = scarf_complex(base);
  o.require(padded(scarf.complex().f_vector(), 3) == std::vector<std::size_t>{6, 7, 2}, "f-vector (6, 7, 2)");
  // Facets: two triangles and one edge meeting neither inside a triangle.
  std::vector<Face> facets;
  for (const Face& f : scarf.faces()) {
    bool maximal = true;
    for (const Face& g : scarf.faces()) maximal = maximal && !(f != g && f.subset_of(g));
    if (maximal) facets.push_back(f);
  }
  const auto triangles = std::count_if(facets.begin(), facets.end(), [](const Face& f) { return f.size() == 3; });
  const auto edges = std::count_if(facets.begin(), facets.end(), [](const Face& f) { return f.size() == 2; });
  o.require(facets.size() == 3 && triangles == 2 && edges == 1, "two triangles plus a bridge");
  o.require(complex_to_json(scarf).dump(2) + "\n" ==
                read_text(std::string(SCARFLAB_GOLDEN_DIR) + "/p4_s5_111_scarf.json"),
            "matches golden file");

  grow(o, "S5(1,n,1)", [](int n) { return FamilyTag::spider5(1, n, 1); }, 6, 4);
  grow(o, "S6(1,n,1)", [](int n) { return FamilyTag::spider6(1, n, 1); }, 7, 3);
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const Graph claw = fam(FamilyTag::star(3));
  for (const Graph& g : connected_up_to(6)) {
    const std::string id = to_graph6(g);
    for (int m = 1; m <= g.n(); ++m) {
      for (VertexMask h : connected_induced_masks(g, m)) {
        for (int k = m; k <= g.n(); ++k) {
          const auto bigger = connected_induced_masks(g, k);
          o.require(std::any_of(bigger.begin(), bigger.end(), [h](VertexMask s) { return (s & h) == h; }),
                    "extension on " + id);
        }
      }
    }
    for (int k = 1; k <= g.n(); ++k) {
      o.require(connected_induced_masks(g, k).size() >= static_cast<std::size_t>((g.n() + k - 1) / k),
                "ceiling bound on " + id);
    }
    const bool low_degree = g.max_degree() <= 2;
    const Family f = recognize_family(g).family;
    o.require(low_degree == !contains_subgraph(g, claw), "claw-free equivalence on " + id);
    o.require(low_degree == (f == Family::PathP || f == Family::CycleC), "path/cycle equivalence on " + id);
    if (g.n() >= 2) {
      const bool path = is_tree(g) && low_degree;
      const auto removable = removable_vertices(g).size();
      o.require(path ? removable == 2 : removable >= 3, "removable vertices on " + id);
    }
  }

  ObstructionOptions options;
  options.trees_only = true;
  const auto catalog = derive_obstructions(IdealSpec::path(4), 8, options, kBattery);
  std::string shapes;
  for (const Graph& x : catalog.graphs) shapes += (shapes.empty() ? "" : " ") + to_graph6(x);
  o.note("tree obstructions on <= 8 vertices: " + shapes);
  std::size_t trees = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& tree : enumerate_trees(n)) {
      bool avoids = true;
      for (const Graph& x : catalog.graphs) avoids = avoids && !contains_induced(tree, x);
      o.require(in_p4_scarf_family_list(tree) == avoids, "special trees on " + to_graph6(tree));
      ++trees;
    }
  }
  o.note(std::to_string(trees) + " trees checked");
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [key, ideal] : corpus) {
    if (ideal.size() > 12 || ideal.universe().size() > 8) continue;
    o.require(scarf_complex(ideal).complex() == oracle::scarf_faces(ideal), "Scarf faces");
    o.require(is_scarf(ideal, kBattery).is_scarf() == oracle::is_scarf_all_monomials(ideal, kBattery), "BPS check");
    ++checked;
  }
  o.note(std::to_string(checked) + " of " + std::to_string(corpus.size()) + " corpus ideals in range");
  o.require(checked > 0, "corpus is nonempty");
  return o;
}

Outcome criterion_9() {
  Outcome o;
  ObstructionOptions options;
  options.mode = Containment::Subgraph;
  const auto p4 = derive_obstructions(IdealSpec::path(4), 5, options, kBattery);
  std::string shapes;
  for (const Graph& g : p4.graphs) shapes += (shapes.empty() ? "" : " ") + to_graph6(g);
  o.require(p4.graphs.size() == 4, "P4, n=5: 4 minimal graphs (got " + std::to_string(p4.graphs.size()) + ")");
  o.note("P4 subgraph obstructions: " + shapes);

  const auto p5 = derive_obstructions(IdealSpec::path(5), 6, options, kBattery);
  for (const Graph& g : p5.graphs) {
    const auto ideal = build_ideal(g, IdealSpec::path(5));
    o.require(!oracle::is_scarf_all_monomials(ideal, kBattery), "P5 candidate " + to_graph6(g) + " is NotScarf");
  }
  o.note("P5, n=6: " + std::to_string(p5.graphs.size()) + " candidates (reference count 8)");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto artifacts = [](int jobs) {
    std::ostringstream s;
    s << scarf_report_to_json(is_scarf(build_ideal(fam(FamilyTag::path(7)), IdealSpec::connected(3)), kWithQ)).dump(2);
    s << complex_to_json(scarf_complex(build_ideal(fam(FamilyTag::spider5(1, 1, 1)), IdealSpec::path(4)))).dump(2);
    s << path_cycle_table_to_json(check_paths_cycles(3, 9, kBattery)).dump(2);
    const auto ideal = build_ideal(fam(FamilyTag::spider6(1, 1, 1)), IdealSpec::path(4));
    s << leaf_report_to_json(leaf_lemma_pipeline(ideal, 7, kBattery), ideal).dump(2);
    SweepOptions sweep_options;
    sweep_options.jobs = jobs;
    write_sweep_jsonl(s, sweep(IdealSpec::path(4), 6, kBattery, sweep_options));
    ObstructionOptions options;
    options.mode = Containment::Subgraph;
    options.jobs = jobs;
    s << obstruction_catalog_to_json(derive_obstructions(IdealSpec::path(4), 5, options, kBattery)).dump(2);
    return s.str();
  };
  const std::string first = artifacts(1);
  o.require(first == artifacts(1), "repeat run");
  o.require(first == artifacts(4), "parallel run");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 = no bound
  };
  const std::vector<Criterion> criteria{
      {"worked example C3(P6), C3(P7)", criterion_1, 1},
      {"paths and cycles for t = 3, 4", criterion_2, 30},
      {"Theorem A on connected graphs <= 6 vertices", criterion_3, 300},
      {"Theorem B on 5 vertices, extended to <= 6", criterion_4, 600},
      {"two-generator lemma, t = 3, 4", criterion_5, 10},
      {"spider base cases and leaf lemma", criterion_6, 120},
      {"graph lemmas and special trees", criterion_7, 300},
      {"oracle equivalence on the corpus", criterion_8, 0},
      {"obstruction derivation", criterion_9, 900},
      {"determinism of JSON artifacts", criterion_10, 0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && seconds > criteria[i].limit_seconds) {
      outcome.pass = false;
      outcome.notes.push_back("over the time limit of " + std::to_string(criteria[i].limit_seconds) + " s");
    }
    all = all && outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name << " ("
              << std::fixed << std::setprecision(2) << seconds << " s)\n";
    std::size_t shown = 0;
    for (const auto& note : outcome.notes) {
      if (++shown > 10) {
        std::cout << "    ...\n";
        break;
      }
      std::cout << "    " << note << '\n';
    }
  }
  return all ? 0 : 1;
}
