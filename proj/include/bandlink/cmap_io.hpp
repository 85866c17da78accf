#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bandlink/cmap.hpp"

namespace bandlink {

// CMAP text format:
//
//   cmap v1
//   genus <g> [<g2> ...]     # several values: per-component genera
//   darts <2E>
//   alpha <img(1)> ... <img(2E)>
//   sigma <img(1)> ... <img(2E)>
//
// '#' starts a comment. Errors carry the 1-based line number.
CombinatorialMap parse_cmap(std::istream& in, const std::string& source = "<input>");
CombinatorialMap parse_cmap(const std::string& text);
CombinatorialMap read_cmap_file(const std::filesystem::path& path);

void write_cmap(std::ostream& out, const CombinatorialMap& map);
std::string to_cmap_string(const CombinatorialMap& map);
void write_cmap_file(const std::filesystem::path& path, const CombinatorialMap& map);

}  // namespace bandlink
