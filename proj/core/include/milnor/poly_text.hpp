#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "milnor/bipoly.hpp"

namespace milnor {

// Syntax error with the 0-based input position where parsing failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Grammar (whitespace insignificant):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := 'x' | 'y' | rational | '(' expr ')'
//   rational := int ('/' posint)?
// Implicit multiplication ("2x") is rejected.
BiPoly parse_poly(const std::string& text);

// Canonical rendering: terms in graded-lexicographic order (x above y),
// leading term first; parse_poly(format_poly(p)) == p.
std::string format_poly(const BiPoly& p);

}  // namespace milnor
