#include "jssec/syntax/parser.hpp"

#include <algorithm>

#include "jssec/syntax/lexer.hpp"
#include "jssec/syntax/numbers.hpp"

namespace jssec::syntax {

namespace {

class Parser {
public:
    explicit Parser(std::string_view source) {
        for (auto& token : tokenize(source)) {
            if (token.kind != TokenKind::Comment) tokens_.push_back(std::move(token));
        }
        if (!tokens_.empty()) {
            const auto& last = tokens_.back().span;
            end_span_ = {last.end_line, last.end_column, last.end_line, last.end_column};
        }
    }

    NodePtr program() {
        auto node = std::make_unique<Node>(NodeKind::Program, SourceSpan{1, 1, 1, 1});
        while (!at_end()) node->children.push_back(statement());
        if (!node->children.empty()) {
            node->span = SourceSpan::between(node->children.front()->span, node->children.back()->span);
        }
        return node;
    }

private:
    // ---- token helpers -------------------------------------------------

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token* peek(std::size_t ahead = 0) const {
        return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
    }
    bool at_punct(std::string_view p) const { return peek() && peek()->is_punct(p); }
    bool at_keyword(std::string_view k) const { return peek() && peek()->is_keyword(k); }

    bool newline_before_current() const {
        if (pos_ == 0 || at_end()) return false;
        return tokens_[pos_].span.line > tokens_[pos_ - 1].span.end_line;
    }

    const Token& advance() { return tokens_[pos_++]; }
    const SourceSpan& previous_span() const { return tokens_[pos_ - 1].span; }

    bool accept_punct(std::string_view p) {
        if (!at_punct(p)) return false;
        ++pos_;
        return true;
    }
    bool accept_keyword(std::string_view k) {
        if (!at_keyword(k)) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        if (at_end()) throw ParseError("expected " + expected + " but reached end of input", end_span_);
        throw ParseError("expected " + expected + " but found '" + peek()->lexeme + "'", peek()->span);
    }

    const Token& expect_punct(std::string_view p) {
        if (!at_punct(p)) fail("'" + std::string(p) + "'");
        return advance();
    }

    std::string expect_identifier() {
        if (at_end() || peek()->kind != TokenKind::Identifier) fail("identifier");
        return advance().lexeme;
    }

    // Property names after '.' and object literal keys may be reserved words.
    std::string expect_property_name() {
        if (!at_end() && (peek()->kind == TokenKind::Identifier || peek()->kind == TokenKind::Keyword)) {
            return advance().lexeme;
        }
        fail("property name");
    }

    void consume_semicolon() {
        if (accept_punct(";")) return;
        if (at_end() || at_punct("}") || newline_before_current()) return;
        fail("';'");
    }

    static NodePtr make(NodeKind kind, SourceSpan span) { return std::make_unique<Node>(kind, span); }

    // ---- statements ----------------------------------------------------

    NodePtr statement() {
        if (at_end()) fail("statement");
        const Token& t = *peek();
        if (t.is_punct("{")) return block();
        if (t.is_punct(";")) {
            advance();
            return make(NodeKind::Empty, previous_span());
        }
        if (t.kind == TokenKind::Keyword) {
            if (t.lexeme == "var") {
                auto node = var_declaration();
                consume_semicolon();
                node->span = SourceSpan::between(node->span, previous_span());
                return node;
            }
            if (t.lexeme == "function") return function(NodeKind::FunctionDecl);
            if (t.lexeme == "return") return return_statement();
            if (t.lexeme == "if") return if_statement();
            if (t.lexeme == "for") return for_statement();
            if (t.lexeme == "while" || t.lexeme == "with") return while_or_with();
        }
        auto expr = expression();
        auto node = make(NodeKind::ExpressionStatement, expr->span);
        node->children.push_back(std::move(expr));
        consume_semicolon();
        node->span = SourceSpan::between(node->span, previous_span());
        return node;
    }

    NodePtr block() {
        const SourceSpan open = expect_punct("{").span;
        auto node = make(NodeKind::Block, open);
        while (!at_punct("}")) {
            if (at_end()) fail("'}'");
            node->children.push_back(statement());
        }
        advance();
        node->span = SourceSpan::between(open, previous_span());
        return node;
    }

    NodePtr var_declaration() {
        const SourceSpan start = advance().span;  // 'var'
        auto node = make(NodeKind::VarDecl, start);
        do {
            node->names.push_back(expect_identifier());
            if (accept_punct("=")) {
                node->children.push_back(assignment());
            } else {
                node->children.push_back(nullptr);
            }
        } while (accept_punct(","));
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    NodePtr function(NodeKind kind) {
        const SourceSpan start = advance().span;  // 'function'
        auto node = make(kind, start);
        if (kind == NodeKind::FunctionDecl) {
            node->name = expect_identifier();
        } else if (!at_end() && peek()->kind == TokenKind::Identifier) {
            node->name = advance().lexeme;
        }
        expect_punct("(");
        if (!at_punct(")")) {
            do {
                node->names.push_back(expect_identifier());
            } while (accept_punct(","));
        }
        expect_punct(")");
        ++function_depth_;
        node->children.push_back(block());
        --function_depth_;
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    NodePtr return_statement() {
        const Token& keyword = advance();
        if (function_depth_ == 0) throw ParseError("'return' outside of a function body", keyword.span);
        auto node = make(NodeKind::Return, keyword.span);
        if (!at_end() && !at_punct(";") && !at_punct("}")) node->children.push_back(expression());
        consume_semicolon();
        node->span = SourceSpan::between(keyword.span, previous_span());
        return node;
    }

    NodePtr if_statement() {
        const SourceSpan start = advance().span;
        auto node = make(NodeKind::If, start);
        expect_punct("(");
        node->children.push_back(expression());
        expect_punct(")");
        node->children.push_back(statement());
        node->children.push_back(accept_keyword("else") ? statement() : nullptr);
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    NodePtr while_or_with() {
        const Token& keyword = advance();
        auto node = make(keyword.lexeme == "while" ? NodeKind::While : NodeKind::With, keyword.span);
        expect_punct("(");
        node->children.push_back(expression());
        expect_punct(")");
        node->children.push_back(statement());
        node->span = SourceSpan::between(keyword.span, previous_span());
        return node;
    }

    NodePtr for_statement() {
        const SourceSpan start = advance().span;
        expect_punct("(");
        NodePtr init;
        if (at_keyword("var")) {
            init = var_declaration();
            if (at_keyword("in")) {
                if (init->names.size() != 1 || init->children[0]) {
                    throw ParseError("for-in declares exactly one variable without initializer", init->span);
                }
                return for_in(start, std::move(init));
            }
        } else if (!at_punct(";")) {
            init = expression();
            if (at_keyword("in")) {
                check_assignment_target(*init);
                return for_in(start, std::move(init));
            }
        }
        auto node = make(NodeKind::For, start);
        expect_punct(";");
        NodePtr test = at_punct(";") ? nullptr : expression();
        expect_punct(";");
        NodePtr update = at_punct(")") ? nullptr : expression();
        expect_punct(")");
        node->children.push_back(std::move(init));
        node->children.push_back(std::move(test));
        node->children.push_back(std::move(update));
        node->children.push_back(statement());
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    NodePtr for_in(SourceSpan start, NodePtr target) {
        advance();  // 'in'
        auto node = make(NodeKind::ForIn, start);
        node->children.push_back(std::move(target));
        node->children.push_back(expression());
        expect_punct(")");
        node->children.push_back(statement());
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    // ---- expressions ---------------------------------------------------

    NodePtr expression() { return assignment(); }

    static void check_assignment_target(const Node& target) {
        if (target.kind != NodeKind::Identifier && target.kind != NodeKind::Member &&
            target.kind != NodeKind::Index) {
            throw ParseError("invalid assignment target", target.span);
        }
    }

    NodePtr assignment() {
        auto left = logical_or();
        if (at_punct("=")) {
            check_assignment_target(*left);
            advance();
            auto right = assignment();
            auto node = make(NodeKind::Assign, SourceSpan::between(left->span, right->span));
            node->op = "=";
            node->children.push_back(std::move(left));
            node->children.push_back(std::move(right));
            return node;
        }
        return left;
    }

    NodePtr binary(NodePtr left, NodePtr right, const std::string& op) {
        auto node = make(NodeKind::Binary, SourceSpan::between(left->span, right->span));
        node->op = op;
        node->children.push_back(std::move(left));
        node->children.push_back(std::move(right));
        return node;
    }

    template <typename Next>
    NodePtr left_assoc(std::initializer_list<std::string_view> ops, Next next) {
        auto left = (this->*next)();
        while (!at_end() && peek()->kind == TokenKind::Punctuator &&
               std::find(ops.begin(), ops.end(), peek()->lexeme) != ops.end()) {
            const std::string op = advance().lexeme;
            auto right = (this->*next)();
            left = binary(std::move(left), std::move(right), op);
        }
        return left;
    }

    NodePtr logical_or() { return left_assoc({"||"}, &Parser::logical_and); }
    NodePtr logical_and() { return left_assoc({"&&"}, &Parser::equality); }
    NodePtr equality() { return left_assoc({"==", "!=", "===", "!=="}, &Parser::relational); }
    NodePtr relational() { return left_assoc({"<", ">", "<=", ">="}, &Parser::additive); }
    NodePtr additive() { return left_assoc({"+", "-"}, &Parser::multiplicative); }
    NodePtr multiplicative() { return left_assoc({"*", "/", "%"}, &Parser::unary); }

    NodePtr unary() {
        if (at_end()) fail("expression");
        const Token& t = *peek();
        if (t.is_punct("!") || t.is_punct("-") || t.is_keyword("typeof")) {
            const SourceSpan start = advance().span;
            auto operand = unary();
            auto node = make(NodeKind::Unary, SourceSpan::between(start, operand->span));
            node->op = t.lexeme;
            node->children.push_back(std::move(operand));
            return node;
        }
        if (t.is_keyword("delete")) {
            const SourceSpan start = advance().span;
            auto operand = unary();
            auto node = make(NodeKind::Delete, SourceSpan::between(start, operand->span));
            node->children.push_back(std::move(operand));
            return node;
        }
        if (t.is_punct("++") || t.is_punct("--")) {
            const std::string op = t.lexeme;
            const SourceSpan start = advance().span;
            auto operand = unary();
            check_assignment_target(*operand);
            auto node = make(NodeKind::Unary, SourceSpan::between(start, operand->span));
            node->op = op;
            node->prefix = true;
            node->children.push_back(std::move(operand));
            return node;
        }
        return postfix();
    }

    NodePtr postfix() {
        auto operand = call();
        // A postfix operator may not follow a line break.
        if ((at_punct("++") || at_punct("--")) && !newline_before_current()) {
            check_assignment_target(*operand);
            const Token& t = advance();
            auto node = make(NodeKind::Unary, SourceSpan::between(operand->span, t.span));
            node->op = t.lexeme;
            node->children.push_back(std::move(operand));
            return node;
        }
        return operand;
    }

    std::vector<NodePtr> arguments() {
        std::vector<NodePtr> args;
        expect_punct("(");
        if (!at_punct(")")) {
            do {
                args.push_back(assignment());
            } while (accept_punct(","));
        }
        expect_punct(")");
        return args;
    }

    // Applies `.name` and `[expr]` suffixes.
    bool member_suffix(NodePtr& expr) {
        if (accept_punct(".")) {
            auto node = make(NodeKind::Member, expr->span);
            node->name = expect_property_name();
            node->span = SourceSpan::between(expr->span, previous_span());
            node->children.push_back(std::move(expr));
            expr = std::move(node);
            return true;
        }
        if (accept_punct("[")) {
            auto key = expression();
            expect_punct("]");
            auto node = make(NodeKind::Index, SourceSpan::between(expr->span, previous_span()));
            node->children.push_back(std::move(expr));
            node->children.push_back(std::move(key));
            expr = std::move(node);
            return true;
        }
        return false;
    }

    NodePtr member_or_new() {
        NodePtr expr;
        if (at_keyword("new")) {
            const SourceSpan start = advance().span;
            auto callee = member_or_new();
            expr = make(NodeKind::New, start);
            expr->children.push_back(std::move(callee));
            if (at_punct("(")) {
                for (auto& arg : arguments()) expr->children.push_back(std::move(arg));
            }
            expr->span = SourceSpan::between(start, previous_span());
        } else {
            expr = primary();
        }
        while (member_suffix(expr)) {
        }
        return expr;
    }

    NodePtr call() {
        auto expr = member_or_new();
        while (true) {
            if (at_punct("(")) {
                auto node = make(NodeKind::Call, expr->span);
                node->children.push_back(std::move(expr));
                for (auto& arg : arguments()) node->children.push_back(std::move(arg));
                node->span = SourceSpan::between(node->children[0]->span, previous_span());
                expr = std::move(node);
            } else if (!member_suffix(expr)) {
                return expr;
            }
        }
    }

    NodePtr literal(SourceSpan span, LiteralValue value) {
        auto node = make(NodeKind::Literal, span);
        node->literal = std::move(value);
        return node;
    }

    NodePtr primary() {
        if (at_end()) fail("expression");
        const Token& t = *peek();
        switch (t.kind) {
            case TokenKind::Identifier: {
                advance();
                auto node = make(NodeKind::Identifier, t.span);
                node->name = t.lexeme;
                return node;
            }
            case TokenKind::Number:
                advance();
                return literal(t.span, t.number_value);
            case TokenKind::String:
                advance();
                return literal(t.span, t.string_value);
            case TokenKind::Keyword:
                if (t.lexeme == "this") {
                    advance();
                    return make(NodeKind::This, t.span);
                }
                if (t.lexeme == "true" || t.lexeme == "false") {
                    advance();
                    return literal(t.span, t.lexeme == "true");
                }
                if (t.lexeme == "null") {
                    advance();
                    return literal(t.span, NullLiteral{});
                }
                if (t.lexeme == "undefined") {
                    advance();
                    return literal(t.span, UndefinedLiteral{});
                }
                if (t.lexeme == "function") return function(NodeKind::FunctionExpr);
                break;
            case TokenKind::Punctuator:
                if (t.lexeme == "(") {
                    advance();
                    auto inner = expression();
                    expect_punct(")");
                    return inner;
                }
                if (t.lexeme == "[") return array_literal();
                if (t.lexeme == "{") return object_literal();
                break;
            case TokenKind::Comment:
                break;
        }
        fail("expression");
    }

    NodePtr array_literal() {
        const SourceSpan start = advance().span;
        auto node = make(NodeKind::ArrayLiteral, start);
        while (!at_punct("]")) {
            node->children.push_back(assignment());
            if (!accept_punct(",")) break;
        }
        expect_punct("]");
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    NodePtr object_literal() {
        const SourceSpan start = advance().span;
        auto node = make(NodeKind::ObjectLiteral, start);
        while (!at_punct("}")) {
            if (at_end()) fail("property name");
            const Token& key = *peek();
            if (key.kind == TokenKind::String) {
                advance();
                node->names.push_back(key.string_value);
            } else if (key.kind == TokenKind::Number) {
                advance();
                node->names.push_back(number_to_string(key.number_value));
            } else {
                node->names.push_back(expect_property_name());
            }
            expect_punct(":");
            node->children.push_back(assignment());
            if (!accept_punct(",")) break;
        }
        expect_punct("}");
        node->span = SourceSpan::between(start, previous_span());
        return node;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int function_depth_ = 0;
    SourceSpan end_span_;
};

}  // namespace

NodePtr parse_program(std::string_view source) { return Parser(source).program(); }

}  // namespace jssec::syntax
