#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jssec/syntax/source_span.hpp"

namespace jssec::syntax {

enum class NodeKind {
    Program,
    VarDecl,
    FunctionDecl,
    FunctionExpr,
    Call,
    New,
    Member,
    Index,
    Assign,
    Binary,
    Unary,
    Delete,
    Return,
    If,
    For,
    ForIn,
    While,
    With,
    Block,
    Empty,
    ObjectLiteral,
    ArrayLiteral,
    Identifier,
    Literal,
    This,
    ExpressionStatement,
};

std::string_view to_string(NodeKind kind);

struct UndefinedLiteral {
    bool operator==(const UndefinedLiteral&) const = default;
};
struct NullLiteral {
    bool operator==(const NullLiteral&) const = default;
};
using LiteralValue = std::variant<UndefinedLiteral, NullLiteral, bool, double, std::string>;

struct Node;
using NodePtr = std::unique_ptr<Node>;

// One node type for every construct. Layout by kind:
//
//   Program, Block          children = statements
//   VarDecl                 names = declared names, children[i] = initializer or null
//   FunctionDecl/Expr       name (may be empty for expressions), names = parameters,
//                           children[0] = Block body
//   Call, New               children[0] = callee, children[1..] = arguments
//   Member                  children[0] = object, name = property
//   Index                   children[0] = object, children[1] = key expression
//   Assign                  children[0] = target, children[1] = value, op = "="
//   Binary                  op, children[0..1]; includes && and ||
//   Unary                   op in {! - typeof ++ --}, children[0]; prefix for ++/--
//   Delete, Return          children[0] = operand (Return may have none)
//   If                      children = {test, consequent, alternate-or-null}
//   For                     children = {init, test, update, body}, any but body may be null
//   ForIn                   children = {VarDecl-or-target, object, body}
//   While, With             children = {test/object, body}
//   ObjectLiteral           names = keys in source order, children = values
//   ArrayLiteral            children = elements
//   Identifier              name
//   Literal                 literal
//   ExpressionStatement     children[0]; traced = false marks synthesized statements
struct Node {
    NodeKind kind;
    SourceSpan span;
    std::string name;
    std::string op;
    std::vector<std::string> names;
    std::vector<NodePtr> children;
    LiteralValue literal;
    bool prefix = false;
    bool traced = true;

    explicit Node(NodeKind k, SourceSpan s = {}) : kind(k), span(s) {}

    const Node* child(std::size_t i) const {
        return i < children.size() ? children[i].get() : nullptr;
    }
    const Node& body() const { return *children.at(0); }
    bool is_function() const {
        return kind == NodeKind::FunctionDecl || kind == NodeKind::FunctionExpr;
    }
};

NodePtr clone(const Node& node);

// S-expression rendering used for structural comparison and debugging.
std::string dump(const Node& node, bool with_spans = false);

bool structurally_equal(const Node& a, const Node& b);

// Pre-order traversal over non-null nodes. The visitor returns false to skip
// a node's children.
template <typename Visitor>
void walk(const Node& node, Visitor&& visit) {
    if (!visit(node)) return;
    for (const auto& child : node.children) {
        if (child) walk(*child, visit);
    }
}

}  // namespace jssec::syntax
