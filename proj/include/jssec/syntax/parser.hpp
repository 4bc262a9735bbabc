#pragma once

#include <string_view>

#include "jssec/syntax/ast.hpp"
#include "jssec/syntax/token.hpp"

namespace jssec::syntax {

// Parses a whole program. Comments are discarded; a newline ends a statement
// when the next token cannot continue it. Throws LexError or ParseError.
NodePtr parse_program(std::string_view source);

}  // namespace jssec::syntax
