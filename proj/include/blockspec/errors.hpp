#pragma once

#include <stdexcept>
#include <string>

namespace blockspec {

// Invalid parameters, malformed inputs, or violated preconditions.
// The command-line tool reports these with exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical identity or consistency check that must hold failed at
// runtime.  Exit code 3.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested computation exceeds a size limit or work budget.
// Exit code 4.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a structure file, with 1-based source location.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& message, int line, int column)
      : ConfigError(message + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace blockspec
