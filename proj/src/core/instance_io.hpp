#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace floodit {

// Text instance format, whitespace separated, '#' starts a comment:
//
//   floodgraph 1
//   n <vertex-count>
//   c <colour-count>
//   colours <c0> ... <c(n-1)>
//   edges <m>
//   <u> <v>          (m lines, 0 <= u, v < n)
//
// Malformed input raises ParseError carrying the offending line.
ColouredGraph parse_instance(std::string_view text);
ColouredGraph load_instance(const std::filesystem::path& path);

// Canonical form: one keyword per line, edges as "u v" with u < v in
// ascending order. parse_instance(write_instance(g)) reproduces g exactly.
std::string write_instance(const ColouredGraph& g);

} // namespace floodit
