#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// `.gem` text format:
//
//   gem <n_colors> <order>
//   <pi_0(0)> ... <pi_0(p-1)>
//   ...
//   <pi_n(0)> ... <pi_n(p-1)>
//
// Lines starting with '#' are comments. The file ends with a newline.
ColoredGraph parse_gem(const std::string& text);
ColoredGraph read_gem(std::istream& in);
ColoredGraph read_gem_file(const std::filesystem::path& path);

std::string format_gem(const ColoredGraph& g);
void write_gem(std::ostream& out, const ColoredGraph& g);
void write_gem_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace gemkit
