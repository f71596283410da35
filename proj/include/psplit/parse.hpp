/*
   Copyright 2026 The psplit Authors

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

#ifndef PSPLIT_PARSE_HPP
#define PSPLIT_PARSE_HPP

#include <string_view>

#include "psplit/field.hpp"
#include "psplit/laurent.hpp"

namespace psplit {

// Literal grammar (whitespace insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := integer | 's' | 'w' | 't' | '(' expr ')'
//
// 'w' names the generator of F_q over F_p and is only accepted when q > p.
// 't' and negative exponents are only accepted by parse_series; there a
// divisor or a negatively-powered base must be a single term c*t^e.

/// Throws ParseError on malformed input, DivisionByZero on x/0.
RatFn parse_ratfn(std::string_view text, const FieldPtr& field);

/// Parses a Laurent polynomial in t over k and returns it known modulo t^end.
LaurentSeries parse_series(std::string_view text, const FieldPtr& field, std::int64_t end = default_precision);

}  // namespace psplit

#endif
