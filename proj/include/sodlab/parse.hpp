#ifndef SODLAB_PARSE_HPP
#define SODLAB_PARSE_HPP

#include <string_view>

#include "sodlab/poly.hpp"

namespace sodlab {

/// Parses the ASCII polynomial grammar
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | identifier ('^' integer)? | '(' expr ')' ('^' integer)?
///   rational := integer ('/' positive-integer)?
///
/// over pre-declared variables. A leading sign is accepted so that canonical
/// output with a negative leading coefficient reparses. Throws ParseError
/// (with the byte offset) on syntax errors, undeclared identifiers and
/// malformed rationals.
QPoly parse_poly(std::string_view text, const VarSpecPtr& vars);

}  // namespace sodlab

#endif  // SODLAB_PARSE_HPP
