#ifndef SCARFLAB_JSON_IO_HPP
#define SCARFLAB_JSON_IO_HPP

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "scarflab/analysis.hpp"
#include "scarflab/complex.hpp"
#include "scarflab/graph.hpp"
#include "scarflab/homology.hpp"
#include "scarflab/monomial.hpp"
#include "scarflab/scarf.hpp"

namespace scarflab {

// Key order is fixed (ordered_json), so equal values dump to equal bytes.
using Json = nlohmann::ordered_json;

/// {"variables": [...], "mingens": [[indices], ...]}
Json ideal_to_json(const MonomialIdeal& ideal);
/// Accepts the same shape; "mingens" may also hold monomial strings such as
/// "x1*x2". Generators are minimalized on the way in.
MonomialIdeal ideal_from_json(const Json& j);

/// {"n": int, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"vertices": [generators], "faces": [[indices]...], "labels": {"0,1": "x1*x2*x3", ...}}.
/// The empty face is keyed "".
Json complex_to_json(const LabeledComplex& complex);
std::string face_key(const Face& face);

/// {"field": "gf2", "betti": [b_0, ...], "empty": false}
Json profile_to_json(const HomologyProfile& profile);
Json verdict_to_json(const AcyclicityVerdict& verdict);

Json scarf_report_to_json(const ScarfReport& report);
Json sweep_record_to_json(const SweepRecord& record);
Json path_cycle_table_to_json(const PathCycleTable& table);
Json leaf_report_to_json(const LeafLemmaReport& report, const MonomialIdeal& source);
Json obstruction_catalog_to_json(const ObstructionCatalog& catalog);

/// One compact JSON object per line.
void write_sweep_jsonl(std::ostream& out, std::span<const SweepRecord> records);
/// graph6 lines preceded by '#' provenance comments.
void write_obstruction_graph6(std::ostream& out, const ObstructionCatalog& catalog);

}  // namespace scarflab

#endif  // SCARFLAB_JSON_IO_HPP
