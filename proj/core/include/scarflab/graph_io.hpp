#ifndef SCARFLAB_GRAPH_IO_HPP
#define SCARFLAB_GRAPH_IO_HPP

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab {

/// Parse failure carrying the 1-based line it occurred on (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

/// One graph per line. Blank lines, '#' comment lines and a leading
/// ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// "n=5; edges: 0-1, 1-2, 2-3"
std::string to_adjacency_text(const Graph& g);
Graph parse_adjacency_text(std::string_view text);
std::vector<Graph> read_adjacency_stream(std::istream& in);

}  // namespace scarflab

#endif  // SCARFLAB_GRAPH_IO_HPP
