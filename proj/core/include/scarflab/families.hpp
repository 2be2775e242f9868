#ifndef SCARFLAB_FAMILIES_HPP
#define SCARFLAB_FAMILIES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab {

enum class Family {
  None,
  PathP,      // P_r
  CycleC,     // C_r
  StarS,      // S_k: centre plus k leaves
  TriangleT,  // T_k: C_3 with k pendant leaves at one triangle vertex
  Broom3,     // S_3^{m,n}
  Broom4,     // S_4^{m,n}
  Spider5,    // S_5^{m,n,p}
  Spider6,    // S_6^{m,n,p}
};

/// A family plus its parameters; unused parameters stay 0.
struct FamilyTag {
  Family family = Family::None;
  std::array<int, 3> params{};

  static FamilyTag path(int r) { return {Family::PathP, {r, 0, 0}}; }
  static FamilyTag cycle(int r) { return {Family::CycleC, {r, 0, 0}}; }
  static FamilyTag star(int k) { return {Family::StarS, {k, 0, 0}}; }
  static FamilyTag triangle(int k) { return {Family::TriangleT, {k, 0, 0}}; }
  static FamilyTag broom3(int m, int n) { return {Family::Broom3, {m, n, 0}}; }
  static FamilyTag broom4(int m, int n) { return {Family::Broom4, {m, n, 0}}; }
  static FamilyTag spider5(int m, int n, int p) { return {Family::Spider5, {m, n, p}}; }
  static FamilyTag spider6(int m, int n, int p) { return {Family::Spider6, {m, n, p}}; }

  int parameter_count() const;
  int vertex_count() const;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// "P7", "C5", "S4", "T2", "S3(1,0)", "S5(1,2,1)", "none".
std::string to_string(const FamilyTag& tag);
FamilyTag parse_family_tag(std::string_view text);

/// Vertex layout: spine (or centre / triangle) first, then each leaf group in
/// parameter order. Spider5 leaf groups sit on spine vertices 1, 3, 5;
/// Spider6 groups on spine vertices 1, 3, 6 (1-based).
Graph make_family(const FamilyTag& tag);

/// All tags of the given family with exactly n vertices, in lexicographic
/// parameter order.
std::vector<FamilyTag> family_members(Family family, int n);

/// First match in the order Path, Cycle, Star, Triangle, Broom3, Broom4,
/// Spider5, Spider6; None when the graph belongs to no family.
FamilyTag recognize_family(const Graph& g);

/// Isomorphic to some T_k, S_k, S_3^{m,n}, S_4^{m,n}, S_5^{m,n,p} or S_6^{m,n,p}.
bool in_p4_scarf_family_list(const Graph& g);

/// P_4 spine with one pendant leaf on each interior vertex (6 vertices).
Graph forbidden_tree_x1();
/// Spider with three legs of length two (7 vertices).
Graph forbidden_tree_x2();

Graph complete_graph(int n);

}  // namespace scarflab

#endif  // SCARFLAB_FAMILIES_HPP
