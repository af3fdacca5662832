/*
   Copyright 2026 The gri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRI_PARSER_HPP
#define GRI_PARSER_HPP

#include <string_view>
#include <variant>

#include "gri/rational.hpp"

namespace gri {

/*
 * Expression grammar:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := 'inv(' expr ')' | '-' factor | atom ('^-1')*
 *   atom   := variable twist? | literal | '(' expr ')'
 *   variable := 'x' digits          twist := '^s' digits
 *   literal  := digits ('/' digits)? | basis label | 'E' digit digit
 *             | '[[' row (',' row)* ']]'   (matrix algebras only)
 *
 * Adjacent constant operands are folded while parsing, so serializing a parsed
 * expression and parsing it again gives the same tree.
 */

using Parsed = std::variant<GenPoly, RatExpr>;

/// GenPoly when no inverse occurs, RatExpr otherwise. Throws ParseError (with
/// line and column) or TwistOutOfRange.
Parsed parse_expression(std::string_view text, const AmbientPtr& ambient);

/// Always the syntax tree, whether or not inverses occur.
RatExpr parse_rational(std::string_view text, const AmbientPtr& ambient);

/// A constant expression evaluated to an algebra element.
Element parse_element(std::string_view text, const AlgebraPtr& algebra);

}  // namespace gri

#endif
