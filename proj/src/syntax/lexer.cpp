#include "jssec/syntax/lexer.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace jssec::syntax {

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Number: return "number";
        case TokenKind::String: return "string";
        case TokenKind::Punctuator: return "punctuator";
        case TokenKind::Comment: return "comment";
    }
    return "token";
}

bool is_reserved_word(std::string_view word) {
    static constexpr std::array<std::string_view, 17> kReserved{
        "var",  "function", "return", "new",  "delete", "this",      "if",     "else", "for",
        "while", "with",    "true",   "false", "null",  "undefined", "typeof", "in"};
    for (auto w : kReserved) {
        if (w == word) return true;
    }
    return false;
}

namespace {

bool is_identifier_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

int hex_value(char c) {
    if (is_digit(c)) return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return c - 'A' + 10;
}

void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_whitespace();
            if (at_end()) break;
            tokens.push_back(next_token());
        }
        return tokens;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++column_;
        }
    }

    SourceSpan point() const { return {line_, column_, line_, column_}; }

    void skip_whitespace() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
                advance();
            } else if (static_cast<unsigned char>(c) == 0xC2 &&
                       static_cast<unsigned char>(peek(1)) == 0xA0) {
                advance();  // no-break space
                advance();
            } else if (static_cast<unsigned char>(c) == 0xEF &&
                       static_cast<unsigned char>(peek(1)) == 0xBB &&
                       static_cast<unsigned char>(peek(2)) == 0xBF) {
                advance();  // byte order mark
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token make(TokenKind kind, std::size_t start, int line, int column) const {
        Token t;
        t.kind = kind;
        t.lexeme = std::string(src_.substr(start, pos_ - start));
        t.span = {line, column, line_, column_};
        return t;
    }

    Token next_token() {
        const std::size_t start = pos_;
        const int line = line_;
        const int column = column_;
        const char c = peek();

        if (c == '/' && peek(1) == '/') {
            while (!at_end() && peek() != '\n') advance();
            return make(TokenKind::Comment, start, line, column);
        }
        if (c == '/' && peek(1) == '*') {
            advance();
            advance();
            while (!(peek() == '*' && peek(1) == '/')) {
                if (at_end()) throw LexError("unterminated comment", {line, column, line_, column_});
                advance();
            }
            advance();
            advance();
            return make(TokenKind::Comment, start, line, column);
        }
        if (is_identifier_start(c)) {
            while (!at_end() && (is_identifier_start(peek()) || is_digit(peek()))) advance();
            Token t = make(TokenKind::Identifier, start, line, column);
            if (is_reserved_word(t.lexeme)) t.kind = TokenKind::Keyword;
            return t;
        }
        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(start, line, column);
        if (c == '"' || c == '\'') return string(start, line, column);
        return punctuator(start, line, column);
    }

    Token number(std::size_t start, int line, int column) {
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            advance();
            advance();
            if (!is_hex_digit(peek())) throw LexError("malformed hexadecimal literal", point());
            double value = 0;
            while (is_hex_digit(peek())) {
                value = value * 16 + hex_value(peek());
                advance();
            }
            Token t = make(TokenKind::Number, start, line, column);
            t.number_value = value;
            return t;
        }
        while (is_digit(peek())) advance();
        if (peek() == '.') {
            advance();
            while (is_digit(peek())) advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t ahead = 1;
            if (peek(1) == '+' || peek(1) == '-') ahead = 2;
            if (is_digit(peek(ahead))) {
                for (std::size_t i = 0; i < ahead; ++i) advance();
                while (is_digit(peek())) advance();
            }
        }
        if (is_identifier_start(peek())) {
            throw LexError("identifier starts immediately after numeric literal", point());
        }
        Token t = make(TokenKind::Number, start, line, column);
        std::string_view text = t.lexeme;
        // from_chars rejects a leading '.', which JS allows.
        std::string buffer;
        if (text.front() == '.') {
            buffer = "0" + t.lexeme;
            text = buffer;
        }
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t.number_value);
        if (ec == std::errc::result_out_of_range) {
            t.number_value = HUGE_VAL;
        } else if (ec != std::errc{}) {
            throw LexError("malformed numeric literal", t.span);
        }
        return t;
    }

    Token string(std::size_t start, int line, int column) {
        const char quote = peek();
        advance();
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n' || peek() == '\r') {
                throw LexError("unterminated string literal", {line, column, line_, column_});
            }
            const char c = peek();
            if (c == quote) {
                advance();
                break;
            }
            if (c != '\\') {
                value += c;
                advance();
                continue;
            }
            advance();
            if (at_end()) throw LexError("unterminated string literal", {line, column, line_, column_});
            const char e = peek();
            switch (e) {
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                case 'r': value += '\r'; break;
                case 'b': value += '\b'; break;
                case 'f': value += '\f'; break;
                case 'v': value += '\v'; break;
                case '0': value += '\0'; break;
                case '\n': break;  // line continuation
                case 'x':
                case 'u': {
                    const std::size_t digits = e == 'x' ? 2 : 4;
                    unsigned cp = 0;
                    for (std::size_t i = 1; i <= digits; ++i) {
                        if (!is_hex_digit(peek(i))) throw LexError("malformed escape sequence", point());
                        cp = cp * 16 + static_cast<unsigned>(hex_value(peek(i)));
                    }
                    for (std::size_t i = 0; i < digits; ++i) advance();
                    append_utf8(value, cp);
                    break;
                }
                default: value += e; break;
            }
            advance();
        }
        Token t = make(TokenKind::String, start, line, column);
        t.string_value = std::move(value);
        return t;
    }

    Token punctuator(std::size_t start, int line, int column) {
        static constexpr std::array<std::string_view, 10> kLong{"===", "!==", "==", "!=", "<=",
                                                                 ">=",  "&&",  "||", "++", "--"};
        for (auto p : kLong) {
            if (src_.substr(pos_, p.size()) == p) {
                for (std::size_t i = 0; i < p.size(); ++i) advance();
                return make(TokenKind::Punctuator, start, line, column);
            }
        }
        static constexpr std::string_view kSingle = "{}()[];,.=<>+-*/%!:";
        if (kSingle.find(peek()) != std::string_view::npos) {
            advance();
            return make(TokenKind::Punctuator, start, line, column);
        }
        SourceSpan span = point();
        advance();
        span.end_line = line_;
        span.end_column = column_;
        throw LexError("illegal character '" + std::string(src_.substr(start, pos_ - start)) + "'", span);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace jssec::syntax
