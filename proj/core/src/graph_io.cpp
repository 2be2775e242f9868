#include "scarflab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace scarflab {

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 0);
  }
  std::size_t pos = 0;
  int n = text[0] - 63;
  pos = 1;
  if (text[0] == '~') {
    if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 size prefix", 0);
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxGraphVertices) throw ParseError("graph6 graph has more than 64 vertices", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) throw ParseError("graph6 length does not match vertex count", 0);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

namespace {

template <typename Parse>
std::vector<Graph> read_lines(std::istream& in, Parse parse, bool allow_header) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;
    if (allow_header && view == ">>graph6<<") continue;
    try {
      out.push_back(parse(view));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number);
    } catch (const Error& e) {
      throw ParseError(e.what(), number);
    }
  }
  return out;
}

int parse_int(std::string_view s, const char* what) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(std::string("expected integer for ") + what, 0);
  return value;
}

}  // namespace

std::vector<Graph> read_graph6_stream(std::istream& in) {
  return read_lines(in, [](std::string_view s) { return parse_graph6(s); }, true);
}

std::string to_adjacency_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << "; edges:";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? " " : ", ") << e.u << '-' << e.v;
    first = false;
  }
  return out.str();
}

Graph parse_adjacency_text(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'n=<count>; edges: ...'", 0);
  auto head = text.substr(0, semi);
  auto eq = head.find('=');
  if (eq == std::string_view::npos || head.substr(0, eq).find('n') == std::string_view::npos) {
    throw ParseError("expected 'n=<count>'", 0);
  }
  const int n = parse_int(head.substr(eq + 1), "vertex count");

  auto rest = text.substr(semi + 1);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'edges:'", 0);
  rest = rest.substr(colon + 1);

  std::vector<Edge> edges;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    bool blank = token.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank) {
      auto dash = token.find('-');
      if (dash == std::string_view::npos) throw ParseError("edge must be written u-v", 0);
      edges.push_back({parse_int(token.substr(0, dash), "edge endpoint"), parse_int(token.substr(dash + 1), "edge endpoint")});
    } else if (comma != std::string_view::npos) {
      throw ParseError("empty edge entry", 0);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw ParseError("edge endpoint out of range", 0);
  }
  return Graph(n, edges);
}

std::vector<Graph> read_adjacency_stream(std::istream& in) {
  return read_lines(in, [](std::string_view s) { return parse_adjacency_text(s); }, false);
}

}  // namespace scarflab
