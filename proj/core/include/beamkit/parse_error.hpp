#pragma once

#include <stdexcept>
#include <string>

namespace beamkit {

/// Instance or fixture text that does not parse; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace beamkit
