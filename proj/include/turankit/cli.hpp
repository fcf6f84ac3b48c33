#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "turankit/hypergraph.hpp"
#include "turankit/solver.hpp"

namespace turankit::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // hard verification failure, or "none" for decision commands
constexpr int kUsage = 2;
constexpr int kBudget = 3;

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A .hg path, or a built-in "@name[:key=value...]" such as "@complete:n=3:r=2",
/// "@edge:r=3" or any zoo name ("@fano", "@turan:n=8:l=2").
Hypergraph load_graph(const std::string& spec);

/// Comma-separated "graph[:count]" items; count defaults to 1.
solver::ForbiddenConfig parse_family(const std::string& text);

}  // namespace turankit::cli
