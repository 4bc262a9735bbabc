#include "jssec/syntax/ast.hpp"

#include <sstream>

namespace jssec::syntax {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Program: return "Program";
        case NodeKind::VarDecl: return "VarDecl";
        case NodeKind::FunctionDecl: return "FunctionDecl";
        case NodeKind::FunctionExpr: return "FunctionExpr";
        case NodeKind::Call: return "Call";
        case NodeKind::New: return "New";
        case NodeKind::Member: return "Member";
        case NodeKind::Index: return "Index";
        case NodeKind::Assign: return "Assign";
        case NodeKind::Binary: return "Binary";
        case NodeKind::Unary: return "Unary";
        case NodeKind::Delete: return "Delete";
        case NodeKind::Return: return "Return";
        case NodeKind::If: return "If";
        case NodeKind::For: return "For";
        case NodeKind::ForIn: return "ForIn";
        case NodeKind::While: return "While";
        case NodeKind::With: return "With";
        case NodeKind::Block: return "Block";
        case NodeKind::Empty: return "Empty";
        case NodeKind::ObjectLiteral: return "ObjectLiteral";
        case NodeKind::ArrayLiteral: return "ArrayLiteral";
        case NodeKind::Identifier: return "Identifier";
        case NodeKind::Literal: return "Literal";
        case NodeKind::This: return "This";
        case NodeKind::ExpressionStatement: return "ExpressionStatement";
    }
    return "?";
}

NodePtr clone(const Node& node) {
    auto copy = std::make_unique<Node>(node.kind, node.span);
    copy->name = node.name;
    copy->op = node.op;
    copy->names = node.names;
    copy->literal = node.literal;
    copy->prefix = node.prefix;
    copy->traced = node.traced;
    copy->children.reserve(node.children.size());
    for (const auto& child : node.children) {
        copy->children.push_back(child ? clone(*child) : nullptr);
    }
    return copy;
}

namespace {

void dump_literal(std::ostream& os, const LiteralValue& value) {
    std::visit(
        [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UndefinedLiteral>) {
                os << "undefined";
            } else if constexpr (std::is_same_v<T, NullLiteral>) {
                os << "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                os << (v ? "true" : "false");
            } else if constexpr (std::is_same_v<T, double>) {
                os << v;
            } else {
                os << '\'' << v << '\'';
            }
        },
        value);
}

void dump_into(std::ostream& os, const Node& node, bool with_spans) {
    os << '(' << to_string(node.kind);
    if (with_spans) os << '@' << node.span;
    if (!node.name.empty()) os << " name=" << node.name;
    if (!node.op.empty()) os << " op=" << node.op << (node.prefix ? "/prefix" : "");
    if (!node.names.empty()) {
        os << " [";
        for (std::size_t i = 0; i < node.names.size(); ++i) os << (i ? " " : "") << node.names[i];
        os << ']';
    }
    if (node.kind == NodeKind::Literal) {
        os << ' ';
        dump_literal(os, node.literal);
    }
    for (const auto& child : node.children) {
        os << ' ';
        if (child) {
            dump_into(os, *child, with_spans);
        } else {
            os << "nil";
        }
    }
    os << ')';
}

}  // namespace

std::string dump(const Node& node, bool with_spans) {
    std::ostringstream os;
    dump_into(os, node, with_spans);
    return os.str();
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.span != b.span || a.name != b.name || a.op != b.op ||
        a.names != b.names || !(a.literal == b.literal) || a.prefix != b.prefix ||
        a.traced != b.traced || a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        const Node* x = a.children[i].get();
        const Node* y = b.children[i].get();
        if ((x == nullptr) != (y == nullptr)) return false;
        if (x && !structurally_equal(*x, *y)) return false;
    }
    return true;
}

}  // namespace jssec::syntax
