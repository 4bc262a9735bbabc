#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "jssec/syntax/source_span.hpp"

namespace jssec::syntax {

enum class TokenKind { Identifier, Keyword, Number, String, Punctuator, Comment };

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Punctuator;
    // Raw source text. String literals keep their quotes; comments keep the
    // leading `//` or `/*`.
    std::string lexeme;
    SourceSpan span;

    // Decoded payloads, filled for the matching kinds only.
    std::string string_value;
    double number_value = 0;

    bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
    bool is_punct(std::string_view text) const { return is(TokenKind::Punctuator, text); }
    bool is_keyword(std::string_view text) const { return is(TokenKind::Keyword, text); }
};

bool is_reserved_word(std::string_view word);

// Base for lexing and parsing failures.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, SourceSpan span)
        : std::runtime_error(message), span_(span) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

class LexError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

}  // namespace jssec::syntax
