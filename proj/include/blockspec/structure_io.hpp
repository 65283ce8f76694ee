#pragma once

#include <string>

#include "blockspec/structure.hpp"

namespace blockspec {

// Parses a structure from its JSON form:
//
//   {
//     "k": 3,
//     "symbols": ["a", "b"],
//     "entries": [[{"sym": "a", "coef": 1.0}, ...], ...]   // k rows of k cells
//   }
//
// Malformed JSON raises ParseError with 1-based line/column; a well-formed
// document that violates the schema (wrong shapes, unknown or unused
// symbols, asymmetric pattern) raises ConfigError.
BlockStructure structure_from_json(const std::string& text, const std::string& name = "");

std::string structure_to_json(const BlockStructure& s);

// Reads and parses the file at `path`; the file name becomes the
// structure's display name.
BlockStructure load_structure_file(const std::string& path);

void save_structure_file(const BlockStructure& s, const std::string& path);

}  // namespace blockspec
