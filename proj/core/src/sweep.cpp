#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "scarflab/analysis.hpp"
#include "scarflab/embedding.hpp"
#include "scarflab/enumerate.hpp"

namespace scarflab {

const char* to_string(Containment mode) { return mode == Containment::Induced ? "induced" : "subgraph"; }

Containment parse_containment(std::string_view text) {
  if (text == "induced") return Containment::Induced;
  if (text == "subgraph") return Containment::Subgraph;
  throw Error("unknown containment mode '" + std::string(text) + "' (expected induced or subgraph)");
}

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw Error(std::string(what) + " needs at least one vertex");
  if (n > cap) throw Error(std::string(what) + " on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace

ObstructionCatalog derive_obstructions(const IdealSpec& spec, int n, const ObstructionOptions& options,
                                       std::span<const FieldSpec> fields) {
  const int cap = options.n_cap.value_or(options.trees_only ? kDefaultTreeEnumerationCap : kDefaultConnectedEnumerationCap);
  check_cap(n, cap, "obstruction search");
  const int canon_cap = std::max(cap, kDefaultCanonicalCap);

  std::vector<Graph> candidates;
  for (int k = 1; k <= n; ++k) {
    auto level = options.trees_only ? enumerate_trees(k, cap) : enumerate_connected_graphs(k, cap);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  std::vector<CanonicalForm> forms(candidates.size());
  std::vector<char> scarf(candidates.size(), 0);
  detail::parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
    forms[i] = canonical_form(candidates[i], canon_cap);
    scarf[i] = is_scarf(build_ideal(candidates[i], spec), fields).is_scarf() ? 1 : 0;
  });

  // Smaller graphs first, so every proper subgraph of a candidate has been
  // decided before the candidate itself.
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Graph& ga = candidates[a];
    const Graph& gb = candidates[b];
    if (ga.n() != gb.n()) return ga.n() < gb.n();
    if (ga.edge_count() != gb.edge_count()) return ga.edge_count() < gb.edge_count();
    return forms[a] < forms[b];
  });

  ObstructionCatalog catalog;
  catalog.spec = spec;
  catalog.n = n;
  catalog.mode = options.mode;
  catalog.trees_only = options.trees_only;
  catalog.graphs_examined = candidates.size();
  for (std::size_t i : order) {
    if (scarf[i]) continue;
    const Graph& g = candidates[i];
    const bool contains_known = std::any_of(catalog.graphs.begin(), catalog.graphs.end(), [&](const Graph& h) {
      return options.mode == Containment::Induced ? contains_induced(g, h, cap) : contains_subgraph(g, h, cap);
    });
    if (!contains_known) catalog.graphs.push_back(g);
  }
  return catalog;
}

std::vector<SweepRecord> sweep(const IdealSpec& spec, int n_max, std::span<const FieldSpec> fields,
                               const SweepOptions& options) {
  check_cap(n_max, options.n_cap, "sweep");
  if (!has_prediction(spec)) throw Error("no classification covers " + to_string(spec));

  std::vector<Graph> graphs;
  for (int k = 1; k <= n_max; ++k) {
    auto level = enumerate_connected_graphs(k, options.n_cap);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }

  const int canon_cap = std::max(options.n_cap, kDefaultCanonicalCap);
  std::vector<SweepRecord> records(graphs.size());
  detail::parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    SweepRecord& r = records[i];
    r.graph = graphs[i];
    r.form = canonical_form(r.graph, canon_cap);
    r.family = recognize_family(r.graph);
    const ScarfReport report = is_scarf(build_ideal(r.graph, spec), fields);
    r.generator_count = report.generator_count;
    r.computed = report.is_scarf();
    r.field_disagreement = report.field_disagreement();
    r.predicted = predict_scarf(r.graph, spec);
    r.agree = r.predicted == r.computed;
  });
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) { return a.form < b.form; });
  return records;
}

}  // namespace scarflab
