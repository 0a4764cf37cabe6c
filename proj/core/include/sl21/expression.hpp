#pragma once

#include <string>
#include <string_view>

#include "sl21/affine_env.hpp"

namespace sl21 {

/// Modes are written `e12(-2)`; bare generators `e12` are the zero-mode spelling used
/// for elements of U(g).
enum class Spelling { modes, bare };

/// Parses the term grammar
///   expr   ::= ['+'|'-'] term (('+'|'-') term)*
///   term   ::= [rational] ('*'? factor)*
///   factor ::= atom ['^' integer]
///   atom   ::= gen '(' integer ')' | gen | '(' expr ')'
/// `h+` and `h-` expand to h1 + h2 and h1 - h2. Products are concatenated, not
/// normal-ordered. Throws ParseError with the byte offset of the problem.
Element parse_expression(std::string_view src, Spelling spelling = Spelling::modes);

/// Canonical text form; repeated adjacent modes print as powers.
std::string render(const Element& e, Spelling spelling = Spelling::modes);
std::string render(const Monomial& m, Spelling spelling = Spelling::modes);

}  // namespace sl21
