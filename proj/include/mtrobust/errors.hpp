#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtrobust {

// Malformed file contents. Carries the 1-based line number of the offender.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Arguments or data that leave an analysis undefined: empty corpus, zero
// variance, every instance robust, overlapping edit spans, and so on.
class InvalidInput : public std::runtime_error {
public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failures.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mtrobust
