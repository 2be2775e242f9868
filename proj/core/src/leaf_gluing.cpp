#include "scarflab/leaf_gluing.hpp"

#include <algorithm>

namespace scarflab {

LeafGluing glue_leaf_ideal(const MonomialIdeal& ideal, int x) {
  const auto& universe = ideal.universe();
  if (x < 0 || x >= universe.size()) throw Error("leaf variable index out of range");
  if (universe.size() >= kMaxVariables) throw Error("no room for another variable");

  std::vector<Monomial> with_x;
  for (Monomial g : ideal.gens()) {
    if (g.contains(x)) with_x.push_back(g);
  }
  if (with_x.empty()) throw Error("variable " + universe.name(x) + " divides no generator");

  std::string fresh = universe.name(x) + "'";
  while (universe.index_of(fresh)) fresh += "'";
  VariableUniverse extended = universe.with_variable(fresh);
  const int x_prime = universe.size();

  std::vector<Monomial> gens = ideal.gens();
  for (Monomial g : with_x) gens.push_back(g.without(x).with(x_prime));

  LeafGluing out;
  out.source = ideal;
  out.glued = MonomialIdeal::minimalize(extended, gens);
  out.x = x;
  out.x_prime = x_prime;

  for (Monomial g : ideal.gens()) out.source_to_glued.push_back(static_cast<int>(*out.glued.find(g)));
  for (Monomial g : with_x) {
    out.pairs.push_back({static_cast<int>(*ideal.find(g)), static_cast<int>(*out.glued.find(g)),
                         static_cast<int>(*out.glued.find(g.without(x).with(x_prime)))});
  }
  return out;
}

Face LeafGluing::lift(const Face& source_face) const {
  Face out;
  for (int i : source_face.indices()) out = out.with(source_to_glued.at(static_cast<std::size_t>(i)));
  return out;
}

int LeafGluing::bar_index(int glued_index) const {
  for (const Pair& p : pairs) {
    if (p.glued_xpn == glued_index) return p.source_xn;
  }
  auto it = std::find(source_to_glued.begin(), source_to_glued.end(), glued_index);
  if (it == source_to_glued.end()) throw Error("glued generator index out of range");
  return static_cast<int>(it - source_to_glued.begin());
}

Face evaluate_bar(const LeafGluing& gluing, const Face& glued_face) {
  Face out;
  for (int i : glued_face.indices()) out = out.with(gluing.bar_index(i));
  return out;
}

}  // namespace scarflab
