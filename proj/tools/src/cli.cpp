#include "scarflab_cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "scarflab/analysis.hpp"
#include "scarflab/enumerate.hpp"
#include "scarflab/families.hpp"
#include "scarflab/graph_io.hpp"
#include "scarflab/json_io.hpp"

namespace scarflab::cli {
namespace {

struct Options {
  std::string graph;
  std::string ideal;
  std::string spec;
  std::string fields = "gf2,gf32003";
  std::string format;
  std::string which = "scarf";
  std::string restrict_to;
  std::string theorem;
  std::string mode = "induced";
  std::string x;
  std::string output;
  int n_max = 0;
  int n = 0;
  int t = 3;
  int r_max = 0;
  int jobs = 1;
  int taylor_cap = kDefaultTaylorCap;
  bool trees = false;
};

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(std::string("expected an integer for ") + what + ", got '" + std::string(text) + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// SCARF_LAB_MAX_VERTICES, when set, replaces the default vertex cap.
int vertex_cap(int fallback) {
  const char* env = std::getenv("SCARF_LAB_MAX_VERTICES");
  if (env == nullptr || *env == '\0') return fallback;
  const int cap = parse_int(env, "SCARF_LAB_MAX_VERTICES");
  if (cap < 1 || cap > kMaxGraphVertices) throw Error("SCARF_LAB_MAX_VERTICES out of range");
  return cap;
}

MonomialIdeal load_ideal(const Options& o) {
  if (!o.ideal.empty()) {
    if (!o.graph.empty()) throw Error("give either --ideal or --graph, not both");
    const std::string text = o.ideal.front() == '{' ? o.ideal : read_file(o.ideal);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(std::string("invalid ideal JSON: ") + e.what());
    }
    return ideal_from_json(j);
  }
  if (o.graph.empty()) throw Error("an input is required: --graph with --spec, or --ideal");
  if (o.spec.empty()) throw Error("--graph needs --spec (for example connected:3 or path:4)");
  return build_ideal(parse_graph_argument(o.graph), parse_ideal_spec(o.spec));
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string betti_text(const std::vector<int>& betti) {
  std::string s = "[";
  for (std::size_t i = 0; i < betti.size(); ++i) s += (i ? "," : "") + std::to_string(betti[i]);
  return s + "]";
}

void print_ideal_table(std::ostream& out, const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    out << "zero ideal\n";
    return;
  }
  for (Monomial g : ideal.gens()) out << to_string(g, ideal.universe()) << '\n';
}

void print_report_table(std::ostream& out, const ScarfReport& r) {
  out << "generators: " << r.generator_count << "  scarf faces: " << r.scarf_face_count
      << "  lattice points: " << r.lattice_size << '\n';
  for (const FieldVerdict& v : r.verdicts) {
    out << std::left << std::setw(9) << to_string(v.field) << std::setw(16) << to_string(v.verdict);
    if (v.witness) {
      out << "witness " << to_string(v.witness->point, r.ideal.universe()) << "  betti "
          << betti_text(v.witness->profile.betti);
    }
    out << '\n';
  }
}

void print_sweep_table(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << std::left << std::setw(12) << "graph6" << std::setw(12) << "family" << std::setw(6) << "gens"
      << std::setw(11) << "predicted" << std::setw(10) << "computed" << "agree\n";
  std::size_t disagreements = 0;
  for (const SweepRecord& r : records) {
    out << std::setw(12) << r.form.bytes << std::setw(12) << to_string(r.family) << std::setw(6) << r.generator_count
        << std::setw(11) << (r.predicted ? "Scarf" : "NotScarf") << std::setw(10) << (r.computed ? "Scarf" : "NotScarf")
        << (r.agree ? "yes" : "NO") << (r.field_disagreement ? "  (fields disagree)" : "") << '\n';
    if (!r.agree) ++disagreements;
  }
  out << records.size() << " graphs, " << disagreements << " disagreements\n";
}

int cmd_ideal(const Options& o, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(o);
  if (o.format == "table") {
    print_ideal_table(out, ideal);
  } else {
    out << ideal_to_json(ideal).dump(2) << '\n';
  }
  return 0;
}

int cmd_scarf(const Options& o, std::ostream& out) {
  const auto fields = parse_field_list(o.fields);
  const ScarfReport report = is_scarf(load_ideal(o), fields);
  if (o.format == "table") {
    print_report_table(out, report);
  } else {
    out << scarf_report_to_json(report).dump(2) << '\n';
  }
  return report.is_scarf() ? kExitScarf : kExitNotScarf;
}

int cmd_complex(const Options& o, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(o);
  LabeledComplex complex = o.which == "taylor" ? taylor_complex(ideal, o.taylor_cap) : scarf_complex(ideal);
  if (!o.restrict_to.empty()) complex = restrict_complex(complex, parse_monomial(o.restrict_to, ideal.universe()));
  out << complex_to_json(complex).dump(2) << '\n';
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Graph g = parse_graph_argument(o.graph);
  IdealSpec spec;
  if (o.theorem == "B") {
    spec = IdealSpec::path(4);
  } else if (o.theorem.starts_with("A:")) {
    spec = IdealSpec::connected(parse_int(std::string_view(o.theorem).substr(2), "--theorem"));
  } else {
    throw Error("--theorem must be A:<t> or B");
  }
  const bool predicted = predict_scarf(g, spec);
  const auto fields = parse_field_list(o.fields);
  const ScarfReport report = is_scarf(build_ideal(g, spec), fields);

  Json j;
  j["graph"] = graph_to_json(g);
  j["family"] = to_string(recognize_family(g));
  j["spec"] = to_string(spec);
  j["predicted"] = predicted;
  j["computed"] = report.is_scarf();
  j["agree"] = predicted == report.is_scarf();
  j["report"] = scarf_report_to_json(report);
  out << j.dump(2) << '\n';
  return predicted == report.is_scarf() ? 0 : 1;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto fields = parse_field_list(o.fields);
  SweepOptions options;
  options.jobs = o.jobs;
  options.n_cap = vertex_cap(kDefaultConnectedEnumerationCap);
  const auto records = sweep(parse_ideal_spec(o.spec), o.n_max, fields, options);

  Sink sink(o.output, out);
  if (o.format == "table") {
    print_sweep_table(sink.get(), records);
  } else {
    write_sweep_jsonl(sink.get(), records);
  }
  const bool clean = std::all_of(records.begin(), records.end(), [](const SweepRecord& r) { return r.agree; });
  return clean ? 0 : 1;
}

int cmd_derive(const Options& o, std::ostream& out) {
  const auto fields = parse_field_list(o.fields);
  ObstructionOptions options;
  options.mode = parse_containment(o.mode);
  options.trees_only = o.trees;
  options.jobs = o.jobs;
  options.n_cap = vertex_cap(o.trees ? kDefaultTreeEnumerationCap : kDefaultConnectedEnumerationCap);
  const ObstructionCatalog catalog = derive_obstructions(parse_ideal_spec(o.spec), o.n, options, fields);

  Sink sink(o.output, out);
  if (o.format == "json") {
    sink.get() << obstruction_catalog_to_json(catalog).dump(2) << '\n';
  } else {
    write_obstruction_graph6(sink.get(), catalog);
  }
  return 0;
}

int cmd_leaf(const Options& o, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(o);
  const auto x = ideal.universe().index_of(o.x);
  if (!x) throw Error("unknown variable '" + o.x + "'");
  const auto fields = parse_field_list(o.fields);
  const LeafLemmaReport report = leaf_lemma_pipeline(ideal, *x, fields);
  Json j;
  j["ideal"] = ideal_to_json(ideal);
  j["report"] = leaf_report_to_json(report, ideal);
  out << j.dump(2) << '\n';
  return report.all_hold() ? 0 : 1;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const auto fields = parse_field_list(o.fields);
  const int r_max = o.r_max > 0 ? o.r_max : 2 * o.t + 3;
  out << path_cycle_table_to_json(check_paths_cycles(o.t, r_max, fields)).dump(2) << '\n';
  return 0;
}

int cmd_twogen(const Options& o, std::ostream& out) {
  const auto fields = parse_field_list(o.fields);
  const TwoGeneratorCheck check = check_two_generator_lemma(o.t, fields);
  Json j;
  j["t"] = check.t;
  j["ideals_checked"] = check.ideals_checked;
  Json bad = Json::array();
  for (const MonomialIdeal& ideal : check.counterexamples) bad.push_back(ideal_to_json(ideal));
  j["counterexamples"] = std::move(bad);
  j["holds"] = check.holds();
  out << j.dump(2) << '\n';
  return check.holds() ? 0 : 1;
}

Graph first_graph_in_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const auto graphs = path.ends_with(".adj") ? read_adjacency_stream(in) : read_graph6_stream(in);
  if (graphs.empty()) throw Error(path + " contains no graph");
  return graphs.front();
}

}  // namespace

Graph parse_graph_argument(std::string_view text) {
  if (text.starts_with("@")) return first_graph_in_file(std::string(text.substr(1)));
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("graph '" + std::string(text) + "' is not of the form kind:value");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view value = text.substr(colon + 1);
  if (kind == "family") return make_family(parse_family_tag(value));
  if (kind == "g6") return parse_graph6(value);
  if (kind == "adj") return parse_adjacency_text(value);
  const int n = parse_int(value, "graph size");
  if (kind == "path") return make_family(FamilyTag::path(n));
  if (kind == "cycle") return make_family(FamilyTag::cycle(n));
  if (kind == "star") return make_family(FamilyTag::star(n));
  if (kind == "complete") return complete_graph(n);
  throw Error("unknown graph kind '" + std::string(kind) + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scarf complexes of connected and path ideals of graphs", "scarflab"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "path:n, cycle:n, star:k, complete:n, family:T2, g6:<code>, @file");
    sub->add_option("--ideal", o.ideal, "ideal JSON file, or inline JSON");
    sub->add_option("--spec", o.spec, "connected:t or path:t");
  };
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--fields", o.fields, "comma separated fields: gf<p>, q")->capture_default_str();
  };

  auto* ideal = app.add_subcommand("ideal", "print the ideal of a graph");
  add_input(ideal);
  ideal->add_option("--format", o.format, "json or table");

  auto* scarf = app.add_subcommand("scarf", "decide the Scarf property (exit 0 Scarf, 1 not Scarf)");
  add_input(scarf);
  add_fields(scarf);
  scarf->add_option("--format", o.format, "json or table");

  auto* complex = app.add_subcommand("complex", "emit the Taylor or Scarf complex as JSON");
  add_input(complex);
  complex->add_option("--which", o.which, "taylor or scarf")->check(CLI::IsMember({"taylor", "scarf"}));
  complex->add_option("--restrict", o.restrict_to, "keep faces whose label divides this monomial");
  complex->add_option("--taylor-cap", o.taylor_cap, "largest generator count for the Taylor complex");

  auto* classify = app.add_subcommand("classify", "compare a classification with the computed verdict");
  classify->add_option("--graph", o.graph)->required();
  classify->add_option("--theorem", o.theorem, "A:<t> or B")->required();
  add_fields(classify);

  auto* sweep_cmd = app.add_subcommand("sweep", "check every connected graph up to n-max vertices");
  sweep_cmd->add_option("--spec", o.spec)->required();
  sweep_cmd->add_option("--n-max", o.n_max)->required();
  sweep_cmd->add_option("--jobs", o.jobs);
  sweep_cmd->add_option("--format", o.format, "jsonl or table");
  sweep_cmd->add_option("--output", o.output);
  add_fields(sweep_cmd);

  auto* derive = app.add_subcommand("derive", "minimal non-Scarf graphs up to n vertices");
  derive->add_option("--spec", o.spec)->required();
  derive->add_option("--n", o.n)->required();
  derive->add_option("--mode", o.mode, "induced or subgraph")->capture_default_str();
  derive->add_flag("--trees", o.trees, "only consider trees");
  derive->add_option("--jobs", o.jobs);
  derive->add_option("--format", o.format, "graph6 or json");
  derive->add_option("--output", o.output);
  add_fields(derive);

  auto* leaf = app.add_subcommand("leaf", "run the leaf gluing checks at a variable");
  add_input(leaf);
  leaf->add_option("--x", o.x, "variable name, e.g. x8")->required();
  add_fields(leaf);

  auto* paths = app.add_subcommand("paths", "Scarf verdicts for C_t of paths and cycles");
  paths->add_option("--t", o.t)->capture_default_str();
  paths->add_option("--r-max", o.r_max);
  add_fields(paths);

  auto* twogen = app.add_subcommand("twogen", "exhaustive check of degree-t ideals in t+1 variables");
  twogen->add_option("--t", o.t)->capture_default_str();
  add_fields(twogen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*ideal) return cmd_ideal(o, out);
    if (*scarf) return cmd_scarf(o, out);
    if (*complex) return cmd_complex(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*derive) return cmd_derive(o, out);
    if (*leaf) return cmd_leaf(o, out);
    if (*paths) return cmd_paths(o, out);
    if (*twogen) return cmd_twogen(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace scarflab::cli
