#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jssec/syntax/ast.hpp"

namespace jssec::syntax {

enum class ExpectationKind { Answers, Raises };

// A golden-value comment: `// answers <display>` or `// raises an error`.
struct Expectation {
    SourceSpan span;  // of the comment
    ExpectationKind kind = ExpectationKind::Answers;
    std::optional<std::string> expected;  // absent for Raises
};

std::vector<Expectation> extract_expectations(std::string_view source);

// The ExpressionStatement ending on the comment's line, else the nearest one
// ending before the comment. Null when no statement precedes it.
const Node* attach_expectation(const Node& program, const Expectation& expectation);

}  // namespace jssec::syntax
