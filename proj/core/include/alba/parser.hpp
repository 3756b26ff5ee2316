// Concrete syntax for formulas.
//
//   atoms       [a-z][A-Za-z0-9_]*  (tt and ff are reserved constants)
//   unary       !  F  G  X
//   binary      U (right-associative), &, |  -- in decreasing precedence
//   sugar       a -> b  is accepted and read as !a | b
//
// The printer (Formula::str) emits minimal parentheses under the same table,
// so parse(f.str()) == f for every AST this library builds.

#ifndef ALBA_PARSER_HPP
#define ALBA_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "alba/formula.hpp"

namespace alba {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " +
                           std::to_string(position) + ")"),
        position_(position) {}

  // Byte offset into the input where the error was detected.
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

Formula parse_formula(const std::string& text);

}  // namespace alba

#endif  // ALBA_PARSER_HPP
