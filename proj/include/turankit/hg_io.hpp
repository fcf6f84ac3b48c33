#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "turankit/hypergraph.hpp"

namespace turankit {

// Text format ".hg": first line "n r", then one edge per line as r
// whitespace-separated 0-based vertex indices. '#' starts a comment.

Hypergraph read_hg(std::istream& in);
Hypergraph parse_hg(const std::string& text);
Hypergraph load_hg(const std::filesystem::path& path);

void write_hg(std::ostream& out, const Hypergraph& h);
std::string format_hg(const Hypergraph& h);
void save_hg(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace turankit
