#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jssec/syntax/source_span.hpp"

namespace jssec::runtime {

enum class ErrorCode {
    UnresolvedReference,  // reading an undeclared name
    NotCallable,
    NotConstructor,
    PropertyOfNullish,  // member access on undefined/null
    WithOperand,
    Coercion,  // neither valueOf nor toString produced a primitive
    Define,    // rejected defineProperty / descriptor validation
    ApplyArgs,
    ArrayLength,
    Syntax,  // parse failure inside eval
    Type,    // other builtin argument errors
    StackOverflow,
    ProtoCycle,
};

// ECMAScript error constructor name that best matches the code.
std::string_view error_name(ErrorCode code);

class RuntimeError : public std::runtime_error {
public:
    RuntimeError(ErrorCode code, const std::string& message,
                 std::optional<syntax::SourceSpan> span = std::nullopt)
        : std::runtime_error(message), code_(code), span_(span) {}

    ErrorCode code() const { return code_; }
    const std::optional<syntax::SourceSpan>& span() const { return span_; }
    void set_span_if_missing(const syntax::SourceSpan& span) {
        if (!span_) span_ = span;
    }

private:
    ErrorCode code_;
    std::optional<syntax::SourceSpan> span_;
};

}  // namespace jssec::runtime
