#pragma once

#include <iosfwd>
#include <string>

#include "centra/group.hpp"

namespace centra {

// Group text format:
//   # comment
//   degree 5
//   gen (1 2 3)(4 5)
//   gen (1 2)
// Blank lines and '#' comments are ignored; "degree" must precede any "gen";
// cycles are 1-based with fixed points omitted.  ParseError carries the
// 1-based line number of the offending line.
Group read_group(std::istream& in);
Group load_group(const std::string& path);

// Writes the same format; generators appear in handle order.
std::string format_group(const Group& g);

}  // namespace centra
