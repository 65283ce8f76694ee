#include "blockspec/structure_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace blockspec {

namespace {

using nlohmann::json;

// nlohmann reports a 1-based byte offset; recover line and column for the
// error message.
ParseError parse_error_at(const std::string& text, std::size_t byte,
                          const std::string& what) {
  std::size_t pos = byte == 0 ? 0 : byte - 1;
  if (pos > text.size()) pos = text.size();
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(what, line, column);
}

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw ConfigError(std::string("structure: missing field \"") + key + "\"");
  return obj.at(key);
}

}  // namespace

BlockStructure structure_from_json(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error_at(text, e.byte, "structure: invalid JSON");
  }
  if (!doc.is_object()) throw ConfigError("structure: top level must be an object");

  const json& jk = require(doc, "k");
  if (!jk.is_number_integer() || jk.get<long long>() < 1)
    throw ConfigError("structure: \"k\" must be a positive integer");
  const int k = jk.get<int>();

  const json& jsymbols = require(doc, "symbols");
  if (!jsymbols.is_array() || jsymbols.empty())
    throw ConfigError("structure: \"symbols\" must be a nonempty array");
  std::vector<std::string> names;
  std::unordered_map<std::string, int> id_of;
  for (const json& js : jsymbols) {
    if (!js.is_string() || js.get<std::string>().empty())
      throw ConfigError("structure: symbols must be nonempty strings");
    const std::string s = js.get<std::string>();
    if (!id_of.emplace(s, static_cast<int>(names.size())).second)
      throw ConfigError("structure: duplicate symbol '" + s + "'");
    names.push_back(s);
  }

  const json& jentries = require(doc, "entries");
  if (!jentries.is_array() || jentries.size() != static_cast<std::size_t>(k))
    throw ConfigError("structure: \"entries\" must be an array of k rows");
  std::vector<StructureEntry> entries;
  entries.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const json& row = jentries.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(k))
      throw ConfigError("structure: row " + std::to_string(i) + " must have k cells");
    for (int j = 0; j < k; ++j) {
      const json& cell = row.at(static_cast<std::size_t>(j));
      if (!cell.is_object())
        throw ConfigError("structure: cell (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") must be an object");
      const json& jsym = require(cell, "sym");
      const json& jcoef = require(cell, "coef");
      if (!jsym.is_string())
        throw ConfigError("structure: \"sym\" must be a string");
      if (!jcoef.is_number())
        throw ConfigError("structure: \"coef\" must be a number");
      const auto it = id_of.find(jsym.get<std::string>());
      if (it == id_of.end())
        throw ConfigError("structure: unknown symbol '" + jsym.get<std::string>() +
                          "' at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      entries.push_back({jcoef.get<double>(), it->second});
    }
  }

  const int alphabet = static_cast<int>(names.size());
  return BlockStructure(k, alphabet, std::move(entries), std::move(names), name);
}

std::string structure_to_json(const BlockStructure& s) {
  json doc;
  doc["k"] = s.k();
  json symbols = json::array();
  for (const std::string& n : s.symbol_names()) symbols.push_back(n);
  doc["symbols"] = symbols;
  json rows = json::array();
  for (int i = 0; i < s.k(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.k(); ++j) {
      const StructureEntry& e = s.entry(i, j);
      row.push_back({{"sym", s.symbol_names()[static_cast<std::size_t>(e.symbol)]},
                     {"coef", e.coefficient}});
    }
    rows.push_back(row);
  }
  doc["entries"] = rows;
  return doc.dump(2) + "\n";
}

BlockStructure load_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open structure file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return structure_from_json(buf.str(), path);
}

void save_structure_file(const BlockStructure& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write structure file: " + path);
  out << structure_to_json(s);
}

}  // namespace blockspec
