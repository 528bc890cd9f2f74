#pragma once

#include <stdexcept>
#include <string>

namespace sclkit {

// Parse failure with position information (1-based line/column).
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

}  // namespace sclkit
