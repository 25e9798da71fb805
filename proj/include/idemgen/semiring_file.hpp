// Text format for finite semirings.
//
//   # comment
//   order 4
//   elements 0 1 x 1+x
//   zero 0
//   one 1
//   add
//   0 1 x 1+x
//   ...            (order rows; row i, column j holds labels[i] + labels[j])
//   mul
//   ...            (likewise)
//
// A label token is either a run of non-whitespace characters or a double
// quoted string, so matrix labels are written as "[1 1;0 0]".  Inside quotes
// a backslash escapes the next character.  Blank lines and lines starting
// with '#' are ignored.

#ifndef IDEMGEN_SEMIRING_FILE_HPP_
#define IDEMGEN_SEMIRING_FILE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "idemgen/errors.hpp"
#include "idemgen/finite_semiring.hpp"

namespace idemgen {

  // Malformed document or failed axiom; line and column are 1-based and
  // point at the offending token (0 when the error concerns the whole file).
  class ParseError : public StructureError {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what);

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // Parses and validates the semiring axioms.
  FiniteSemiring parse_semiring_file(std::string_view text);

  std::string serialize_semiring(FiniteSemiring const& s);

  // The token written for a label: the label itself, or a quoted form when
  // it is empty or contains whitespace, quotes or a leading '#'.
  std::string quote_label(std::string_view label);

}  // namespace idemgen

#endif  // IDEMGEN_SEMIRING_FILE_HPP_
