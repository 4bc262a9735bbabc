#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace jssec::syntax {

// 1-based line/column. Columns count code points, not bytes.
struct SourcePosition {
    int line = 1;
    int column = 1;

    auto operator<=>(const SourcePosition&) const = default;
};

// Half-open range: (end_line, end_column) is one past the last character.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int end_line = 1;
    int end_column = 1;

    SourcePosition start() const { return {line, column}; }
    SourcePosition end() const { return {end_line, end_column}; }

    bool contains(const SourceSpan& other) const {
        return start() <= other.start() && other.end() <= end();
    }

    static SourceSpan between(const SourceSpan& first, const SourceSpan& last) {
        return {first.line, first.column, last.end_line, last.end_column};
    }

    auto operator<=>(const SourceSpan&) const = default;
};

inline std::string to_string(const SourceSpan& span) {
    return std::to_string(span.line) + ":" + std::to_string(span.column);
}

inline std::ostream& operator<<(std::ostream& os, const SourceSpan& span) {
    return os << span.line << ':' << span.column << '-' << span.end_line << ':' << span.end_column;
}

}  // namespace jssec::syntax
