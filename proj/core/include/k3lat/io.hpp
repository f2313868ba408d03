#pragma once

#include <string>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line, column;
};

// JSON lattice file:
//   {"name": "T", "gram": [[-2,-1],[...]], "ambient": {...}, "basis": [[...], ...]}
// Integers are JSON numbers or decimal strings; basis entries may be "p/q".
// "basis" lists the basis vectors in ambient coordinates.  "ambient" is either
// an embedded lattice object or a name accepted by build_named.
Lattice parse_lattice(const std::string& text);
Lattice load_lattice(const std::string& path);
std::string lattice_to_json(const Lattice& l, int indent = 1);
void save_lattice(const std::string& path, const Lattice& l);

// K3LATTICE_DATA, falling back to the source tree's data directory.
std::string data_dir();
std::string data_path(const std::string& file);

}  // namespace k3lat
