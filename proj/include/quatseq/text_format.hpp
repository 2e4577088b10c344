#pragma once

// Canonical text forms for sequences and arrays.
//
//   sequence:  i,-j,-1,-1,k,1
//   array:     dims: 2 x 3
//              1,i,j
//              k,-1,-i
//
// Tokens are comma separated; whitespace and line breaks between tokens are
// ignored when parsing. Lines starting with '#' are comments. Arrays are
// row-major and serialized one innermost row per line.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quatseq/sequence.hpp"

namespace quatseq {

class ParseError : public std::runtime_error {
 public:
  /// line and token are 1-based; 0 means not applicable.
  ParseError(const std::string& message, std::size_t line = 0, std::size_t token = 0);

  std::size_t line() const { return line_; }
  std::size_t token() const { return token_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t token_;
};

QuatSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const QuatSequence& seq);

/// Requires a `dims:` line before the elements.
QuatArray parse_array(std::string_view text);
std::string serialize_array(const QuatArray& array);

FloatQuatSequence parse_float_sequence(std::string_view text);
std::string serialize_float_sequence(const FloatQuatSequence& seq);

/// "8 x 8" -> {8, 8}.
std::vector<std::size_t> parse_dims(std::string_view text);
std::string format_dims(std::span<const std::size_t> dims);

}  // namespace quatseq
