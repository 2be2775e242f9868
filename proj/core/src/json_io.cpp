#include "scarflab/json_io.hpp"

#include <ostream>

#include "scarflab/graph_io.hpp"

namespace scarflab {

namespace {

Json indices_json(const std::vector<int>& indices) {
  Json arr = Json::array();
  for (int i : indices) arr.push_back(i);
  return arr;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json j;
  j["variables"] = ideal.universe().names();
  Json gens = Json::array();
  for (Monomial g : ideal.gens()) gens.push_back(indices_json(g.indices()));
  j["mingens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  return guarded("ideal", [&] {
    VariableUniverse universe(j.at("variables").get<std::vector<std::string>>());
    std::vector<Monomial> gens;
    for (const Json& g : j.at("mingens")) {
      if (g.is_string()) {
        gens.push_back(parse_monomial(g.get<std::string>(), universe));
        continue;
      }
      Monomial m;
      for (const Json& idx : g) {
        const int v = idx.get<int>();
        if (v < 0 || v >= universe.size()) throw Error("generator references variable index " + std::to_string(v));
        m = m.with(v);
      }
      gens.push_back(m);
    }
    return minimalize(std::move(universe), std::move(gens));
  });
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxGraphVertices) throw Error("vertex count out of range");
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("edges must be [u, v] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, edges);
  });
}

std::string face_key(const Face& face) {
  std::string key;
  for (int i : face.indices()) {
    if (!key.empty()) key += ',';
    key += std::to_string(i);
  }
  return key;
}

Json complex_to_json(const LabeledComplex& complex) {
  const auto& universe = complex.ideal().universe();
  Json j;
  Json vertices = Json::array();
  for (Monomial g : complex.ideal().gens()) vertices.push_back(to_string(g, universe));
  j["vertices"] = std::move(vertices);

  Json faces = Json::array();
  Json labels = Json::object();
  for (std::size_t i = 0; i < complex.faces().size(); ++i) {
    const Face& f = complex.faces()[i];
    faces.push_back(indices_json(f.indices()));
    labels[face_key(f)] = to_string(complex.labels()[i], universe);
  }
  j["faces"] = std::move(faces);
  j["labels"] = std::move(labels);
  return j;
}

Json profile_to_json(const HomologyProfile& profile) {
  Json j;
  j["field"] = to_string(profile.field);
  j["betti"] = profile.betti;
  j["empty"] = false;
  return j;
}

Json verdict_to_json(const AcyclicityVerdict& verdict) {
  Json j;
  j["field"] = to_string(verdict.field);
  j["betti"] = verdict.betti;
  j["empty"] = verdict.status == Acyclicity::Empty;
  return j;
}

Json scarf_report_to_json(const ScarfReport& report) {
  const auto& universe = report.ideal.universe();
  Json j;
  j["ideal"] = ideal_to_json(report.ideal);
  j["scarf"] = report.is_scarf();
  Json verdicts = Json::array();
  for (const FieldVerdict& v : report.verdicts) {
    Json fv;
    fv["field"] = to_string(v.field);
    fv["verdict"] = to_string(v.verdict);
    if (v.witness) {
      fv["witness"] = {{"point", to_string(v.witness->point, universe)},
                       {"profile", profile_to_json(v.witness->profile)}};
    }
    verdicts.push_back(std::move(fv));
  }
  j["verdicts"] = std::move(verdicts);
  j["fields_agree"] = report.fields_agree();
  j["stats"] = {{"generators", report.generator_count},
                {"scarf_faces", report.scarf_face_count},
                {"lattice_points", report.lattice_size}};
  return j;
}

Json sweep_record_to_json(const SweepRecord& record) {
  Json j;
  j["graph6"] = record.form.bytes;
  j["graph"] = to_adjacency_text(record.graph);
  j["family"] = to_string(record.family);
  j["generators"] = record.generator_count;
  j["predicted"] = record.predicted;
  j["computed"] = record.computed;
  j["agree"] = record.agree;
  j["field_disagreement"] = record.field_disagreement;
  return j;
}

Json path_cycle_table_to_json(const PathCycleTable& table) {
  Json j;
  j["t"] = table.t;
  Json rows = Json::array();
  for (const PathCycleRow& r : table.rows) {
    Json row;
    row["r"] = r.r;
    row["path_generators"] = r.path_generators;
    row["path_scarf"] = r.path_scarf;
    row["cycle_generators"] = r.cycle_generators;
    row["cycle_scarf"] = r.cycle_scarf;
    if (r.path_is_path_complex) row["path_complex_is_path"] = *r.path_is_path_complex;
    if (r.path_is_polygon) row["path_complex_is_polygon"] = *r.path_is_polygon;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json leaf_report_to_json(const LeafLemmaReport& report, const MonomialIdeal& source) {
  Json j;
  j["x"] = source.universe().name(report.x);
  j["hypothesis"] = report.hypothesis;
  j["strong_hypothesis"] = report.strong_hypothesis;
  if (report.gluing) {
    j["glued_ideal"] = ideal_to_json(report.gluing->glued);
    j["glued_scarf_faces"] = report.glued_scarf ? report.glued_scarf->size() : 0;
    j["cone_replacement"] = report.cone_replacement;
    j["star_is_cone"] = report.star_is_cone;
    j["stars_stay_disjoint"] = report.stars_stay_disjoint;
    j["forbidden_pairs_absent"] = report.forbidden_pairs_absent;
    j["face_transfer"] = report.face_transfer;
    j["source_scarf"] = report.source_scarf;
    j["glued_scarf"] = report.glued_scarf_verdict;
    j["scarf_transfer"] = report.scarf_transfer;
  }
  j["all_hold"] = report.all_hold();
  return j;
}

Json obstruction_catalog_to_json(const ObstructionCatalog& catalog) {
  Json j;
  j["spec"] = to_string(catalog.spec);
  j["n"] = catalog.n;
  j["mode"] = to_string(catalog.mode);
  j["trees_only"] = catalog.trees_only;
  j["examined"] = catalog.graphs_examined;
  Json graphs = Json::array();
  for (const Graph& g : catalog.graphs) {
    Json entry;
    entry["graph6"] = to_graph6(g);
    entry["graph"] = graph_to_json(g);
    graphs.push_back(std::move(entry));
  }
  j["graphs"] = std::move(graphs);
  return j;
}

void write_sweep_jsonl(std::ostream& out, std::span<const SweepRecord> records) {
  for (const SweepRecord& r : records) out << sweep_record_to_json(r).dump() << '\n';
}

void write_obstruction_graph6(std::ostream& out, const ObstructionCatalog& catalog) {
  out << "# minimal non-Scarf graphs for " << to_string(catalog.spec) << '\n'
      << "# containment: " << to_string(catalog.mode) << (catalog.trees_only ? ", trees only" : "") << '\n'
      << "# vertices <= " << catalog.n << ", candidates examined: " << catalog.graphs_examined << '\n'
      << "# count: " << catalog.graphs.size() << '\n';
  for (const Graph& g : catalog.graphs) out << to_graph6(g) << '\n';
}

}  // namespace scarflab
