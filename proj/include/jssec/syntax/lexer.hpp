#pragma once

#include <string_view>
#include <vector>

#include "jssec/syntax/token.hpp"

namespace jssec::syntax {

// Splits source into tokens, keeping comments and dropping whitespace.
// Throws LexError on an unterminated string/comment or an illegal character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace jssec::syntax
