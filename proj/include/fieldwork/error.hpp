#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fieldwork {

// Domain or validation failure: malformed algebra, degenerate pairing,
// boundary mismatch, scale bound exceeded. The CLI maps these to exit 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Textual input that cannot be read: DSL syntax, spec files. CLI exit 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A construction produced something that violates its own invariant
// (for instance d*d != 0). Never expected to fire on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ScaleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace fieldwork
