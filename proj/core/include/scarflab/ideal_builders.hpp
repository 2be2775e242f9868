#ifndef SCARFLAB_IDEAL_BUILDERS_HPP
#define SCARFLAB_IDEAL_BUILDERS_HPP

#include <string>
#include <string_view>

#include "scarflab/graph.hpp"
#include "scarflab/monomial.hpp"

namespace scarflab {

enum class IdealKind { Connected, Path };

/// Which ideal to build from a graph: C_t or P_t, with t >= 2.
struct IdealSpec {
  IdealKind kind = IdealKind::Connected;
  int t = 2;

  IdealSpec() = default;
  IdealSpec(IdealKind k, int size);

  static IdealSpec connected(int t) { return {IdealKind::Connected, t}; }
  static IdealSpec path(int t) { return {IdealKind::Path, t}; }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// "connected:3" / "path:4".
IdealSpec parse_ideal_spec(std::string_view text);
std::string to_string(const IdealSpec& spec);

/// Vertex i becomes variable x{i+1}. Disconnected graphs are accepted.
MonomialIdeal build_ideal(const Graph& g, const IdealSpec& spec);

std::size_t generator_count(const Graph& g, const IdealSpec& spec);

}  // namespace scarflab

#endif  // SCARFLAB_IDEAL_BUILDERS_HPP
