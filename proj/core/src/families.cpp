#include "scarflab/families.hpp"

#include <cctype>
#include <charconv>

#include "scarflab/canonical.hpp"

namespace scarflab {
namespace {

constexpr int kRecognitionCap = 24;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("invalid family parameters: " + what);
}

std::vector<Edge> spine_edges(int length) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1});
  return edges;
}

// Appends `count` leaves to vertex `at`, numbering them from `next`.
void attach_leaves(std::vector<Edge>& edges, int at, int count, int& next) {
  for (int i = 0; i < count; ++i) edges.push_back({at, next++});
}

Graph spider(int spine, std::array<int, 3> anchors, std::array<int, 3> counts) {
  auto edges = spine_edges(spine);
  int next = spine;
  for (std::size_t g = 0; g < 3; ++g) attach_leaves(edges, anchors[g], counts[g], next);
  return Graph(next, edges);
}

}  // namespace

int FamilyTag::parameter_count() const {
  switch (family) {
    case Family::None:
      return 0;
    case Family::PathP:
    case Family::CycleC:
    case Family::StarS:
    case Family::TriangleT:
      return 1;
    case Family::Broom3:
    case Family::Broom4:
      return 2;
    case Family::Spider5:
    case Family::Spider6:
      return 3;
  }
  return 0;
}

int FamilyTag::vertex_count() const {
  const auto [a, b, c] = params;
  switch (family) {
    case Family::None:
      return 0;
    case Family::PathP:
    case Family::CycleC:
      return a;
    case Family::StarS:
      return a + 1;
    case Family::TriangleT:
      return a + 3;
    case Family::Broom3:
      return 3 + a + b;
    case Family::Broom4:
      return 4 + a + b;
    case Family::Spider5:
      return 5 + a + b + c;
    case Family::Spider6:
      return 6 + a + b + c;
  }
  return 0;
}

std::string to_string(const FamilyTag& tag) {
  const auto [a, b, c] = tag.params;
  auto s = [](int v) { return std::to_string(v); };
  switch (tag.family) {
    case Family::None:
      return "none";
    case Family::PathP:
      return "P" + s(a);
    case Family::CycleC:
      return "C" + s(a);
    case Family::StarS:
      return "S" + s(a);
    case Family::TriangleT:
      return "T" + s(a);
    case Family::Broom3:
      return "S3(" + s(a) + "," + s(b) + ")";
    case Family::Broom4:
      return "S4(" + s(a) + "," + s(b) + ")";
    case Family::Spider5:
      return "S5(" + s(a) + "," + s(b) + "," + s(c) + ")";
    case Family::Spider6:
      return "S6(" + s(a) + "," + s(b) + "," + s(c) + ")";
  }
  return "none";
}

FamilyTag parse_family_tag(std::string_view text) {
  auto fail = [&]() -> FamilyTag { throw Error("unrecognized family tag '" + std::string(text) + "'"); };
  if (text == "none") return {};
  if (text.size() < 2) return fail();
  const char letter = text[0];
  auto body = text.substr(1);

  auto read_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) fail();
    return v;
  };

  auto paren = body.find('(');
  if (paren == std::string_view::npos) {
    const int k = read_int(body);
    switch (letter) {
      case 'P':
        return FamilyTag::path(k);
      case 'C':
        return FamilyTag::cycle(k);
      case 'S':
        return FamilyTag::star(k);
      case 'T':
        return FamilyTag::triangle(k);
      default:
        return fail();
    }
  }
  if (letter != 'S' || body.back() != ')') return fail();
  const int spine = read_int(body.substr(0, paren));
  std::vector<int> args;
  auto inner = body.substr(paren + 1, body.size() - paren - 2);
  while (true) {
    auto comma = inner.find(',');
    args.push_back(read_int(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (spine == 3 && args.size() == 2) return FamilyTag::broom3(args[0], args[1]);
  if (spine == 4 && args.size() == 2) return FamilyTag::broom4(args[0], args[1]);
  if (spine == 5 && args.size() == 3) return FamilyTag::spider5(args[0], args[1], args[2]);
  if (spine == 6 && args.size() == 3) return FamilyTag::spider6(args[0], args[1], args[2]);
  return fail();
}

Graph make_family(const FamilyTag& tag) {
  const auto [a, b, c] = tag.params;
  require(a >= 0 && b >= 0 && c >= 0, "parameters must be nonnegative");
  switch (tag.family) {
    case Family::None:
      throw Error("cannot build the None family");
    case Family::PathP: {
      require(a >= 1, "path needs r >= 1");
      return Graph(a, spine_edges(a));
    }
    case Family::CycleC: {
      require(a >= 3, "cycle needs r >= 3");
      auto edges = spine_edges(a);
      edges.push_back({0, a - 1});
      return Graph(a, edges);
    }
    case Family::StarS: {
      std::vector<Edge> edges;
      int next = 1;
      attach_leaves(edges, 0, a, next);
      return Graph(next, edges);
    }
    case Family::TriangleT: {
      std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
      int next = 3;
      attach_leaves(edges, 0, a, next);
      return Graph(next, edges);
    }
    case Family::Broom3:
      return spider(3, {0, 2, 2}, {a, b, 0});
    case Family::Broom4:
      return spider(4, {0, 3, 3}, {a, b, 0});
    case Family::Spider5:
      return spider(5, {0, 2, 4}, {a, b, c});
    case Family::Spider6:
      return spider(6, {0, 2, 5}, {a, b, c});
  }
  throw Error("unknown family");
}

std::vector<FamilyTag> family_members(Family family, int n) {
  std::vector<FamilyTag> out;
  switch (family) {
    case Family::None:
      break;
    case Family::PathP:
      if (n >= 1) out.push_back(FamilyTag::path(n));
      break;
    case Family::CycleC:
      if (n >= 3) out.push_back(FamilyTag::cycle(n));
      break;
    case Family::StarS:
      if (n >= 1) out.push_back(FamilyTag::star(n - 1));
      break;
    case Family::TriangleT:
      if (n >= 3) out.push_back(FamilyTag::triangle(n - 3));
      break;
    case Family::Broom3:
    case Family::Broom4: {
      const int rest = n - (family == Family::Broom3 ? 3 : 4);
      for (int m = 0; m <= rest; ++m) out.push_back({family, {m, rest - m, 0}});
      break;
    }
    case Family::Spider5:
    case Family::Spider6: {
      const int rest = n - (family == Family::Spider5 ? 5 : 6);
      for (int m = 0; m <= rest; ++m) {
        for (int k = 0; m + k <= rest; ++k) out.push_back({family, {m, k, rest - m - k}});
      }
      break;
    }
  }
  return out;
}

namespace {

bool matches_any(const Graph& g, const CanonicalForm& form, Family family, FamilyTag* found) {
  for (const FamilyTag& tag : family_members(family, g.n())) {
    Graph candidate = make_family(tag);
    if (candidate.edge_count() != g.edge_count()) continue;
    if (canonical_form(candidate, kRecognitionCap) == form) {
      if (found) *found = tag;
      return true;
    }
  }
  return false;
}

}  // namespace

FamilyTag recognize_family(const Graph& g) {
  if (g.n() == 0) return {};
  const CanonicalForm form = canonical_form(g, kRecognitionCap);
  for (Family f : {Family::PathP, Family::CycleC, Family::StarS, Family::TriangleT, Family::Broom3, Family::Broom4,
                   Family::Spider5, Family::Spider6}) {
    FamilyTag tag;
    if (matches_any(g, form, f, &tag)) return tag;
  }
  return {};
}

bool in_p4_scarf_family_list(const Graph& g) {
  if (g.n() == 0) return false;
  const CanonicalForm form = canonical_form(g, kRecognitionCap);
  for (Family f : {Family::TriangleT, Family::StarS, Family::Broom3, Family::Broom4, Family::Spider5,
                   Family::Spider6}) {
    if (matches_any(g, form, f, nullptr)) return true;
  }
  return false;
}

Graph forbidden_tree_x1() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
}

Graph forbidden_tree_x2() {
  return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

}  // namespace scarflab
