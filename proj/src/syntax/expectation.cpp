#include "jssec/syntax/expectation.hpp"

#include "jssec/syntax/lexer.hpp"

namespace jssec::syntax {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<Expectation> extract_expectations(std::string_view source) {
    std::vector<Expectation> out;
    for (const auto& token : tokenize(source)) {
        if (token.kind != TokenKind::Comment || !token.lexeme.starts_with("//")) continue;
        const std::string_view body = trim(std::string_view(token.lexeme).substr(2));
        if (body == "raises an error") {
            out.push_back({token.span, ExpectationKind::Raises, std::nullopt});
            continue;
        }
        constexpr std::string_view kAnswers = "answers ";
        if (body.starts_with(kAnswers)) {
            const std::string_view rest = trim(body.substr(kAnswers.size()));
            if (!rest.empty()) out.push_back({token.span, ExpectationKind::Answers, std::string(rest)});
        }
    }
    return out;
}

const Node* attach_expectation(const Node& program, const Expectation& expectation) {
    const Node* same_line = nullptr;
    const Node* preceding = nullptr;
    walk(program, [&](const Node& node) {
        if (node.kind != NodeKind::ExpressionStatement) return !node.is_function();
        if (node.span.end_line == expectation.span.line) {
            same_line = &node;
        } else if (node.span.end() <= expectation.span.start()) {
            if (!preceding || preceding->span.end() <= node.span.end()) preceding = &node;
        }
        return false;
    });
    return same_line ? same_line : preceding;
}

}  // namespace jssec::syntax
