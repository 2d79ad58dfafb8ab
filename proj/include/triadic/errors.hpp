#pragma once

#include <stdexcept>
#include <string>

namespace triadic {

// Error categories map 1:1 onto CLI exit codes (see cli.hpp).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
  size_t line;
  ParseError(size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// A requested statistic has an empty denominator (empty graph, empty
// wedge class, zero triangles).
struct UndefinedValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace triadic
