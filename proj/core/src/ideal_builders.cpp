#include "scarflab/ideal_builders.hpp"

#include <charconv>

namespace scarflab {

IdealSpec::IdealSpec(IdealKind k, int size) : kind(k), t(size) {
  if (t < 2) throw Error("ideal size t must be at least 2, got " + std::to_string(t));
}

IdealSpec parse_ideal_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("ideal spec must look like 'connected:3' or 'path:4'");
  auto kind = text.substr(0, colon);
  auto size = text.substr(colon + 1);
  int t = 0;
  auto [ptr, ec] = std::from_chars(size.data(), size.data() + size.size(), t);
  if (ec != std::errc() || ptr != size.data() + size.size()) throw Error("ideal spec size must be an integer");
  if (kind == "connected") return IdealSpec::connected(t);
  if (kind == "path") return IdealSpec::path(t);
  throw Error("unknown ideal kind '" + std::string(kind) + "'");
}

std::string to_string(const IdealSpec& spec) {
  return (spec.kind == IdealKind::Connected ? "connected:" : "path:") + std::to_string(spec.t);
}

MonomialIdeal build_ideal(const Graph& g, const IdealSpec& spec) {
  if (g.n() == 0) throw Error("cannot build an ideal of the empty graph");
  if (g.n() > kMaxVariables) throw Error("graph has more vertices than supported variables");
  std::vector<VertexMask> sets;
  if (spec.t <= g.n()) {
    sets = spec.kind == IdealKind::Connected ? connected_induced_masks(g, spec.t) : path_vertex_masks(g, spec.t);
  }
  std::vector<Monomial> gens;
  gens.reserve(sets.size());
  for (VertexMask s : sets) gens.push_back(Monomial::from_bits(s));
  return MonomialIdeal::minimalize(VariableUniverse::indexed(g.n()), std::move(gens));
}

std::size_t generator_count(const Graph& g, const IdealSpec& spec) { return build_ideal(g, spec).size(); }

}  // namespace scarflab
