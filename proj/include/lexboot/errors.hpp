#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexboot {

/// Malformed bracketed input. `offset` is the byte position in the input
/// text at which the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), detail_(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  /// Message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// Balanced input whose shape is not a valid tree (empty node, leaf with
/// more than one word, ...).
class StructureError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Bad user-supplied configuration: seeds, flags, generator specs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity broke one of the table invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lexboot
