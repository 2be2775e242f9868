#ifndef SCARFLAB_CLI_CLI_HPP
#define SCARFLAB_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scarflab/graph.hpp"

namespace scarflab::cli {

inline constexpr int kExitScarf = 0;
inline constexpr int kExitNotScarf = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// path:n, cycle:n, star:k, complete:n, family:<tag>, g6:<graph6>,
/// @file.g6 (first graph) or @file.adj.
Graph parse_graph_argument(std::string_view text);

}  // namespace scarflab::cli

#endif  // SCARFLAB_CLI_CLI_HPP
