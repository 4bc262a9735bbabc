#include "jssec/lint/scope_model.hpp"

#include <algorithm>
#include <array>

#include "jssec/runtime/hoisting.hpp"

namespace jssec::lint {

using syntax::Node;
using syntax::NodeKind;

std::string_view to_string(NameClass cls) {
    switch (cls) {
        case NameClass::Local: return "local";
        case NameClass::Outer: return "outer";
        case NameClass::Free: return "free";
        case NameClass::Builtin: return "builtin";
    }
    return "?";
}

bool is_builtin_name(const std::string& name) {
    static const std::array<std::string_view, 6> names = {"window", "Object", "Array", "Function", "eval", "undefined"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool FunctionScope::declares(const std::string& name) const {
    auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), name) != v.end(); };
    return in(params) || in(vars) || in(functions) || (!self_name.empty() && self_name == name);
}

int ScopeModel::scope_of(const Node* node) const {
    const auto it = scope_index_.find(node);
    return it == scope_index_.end() ? -1 : it->second;
}

NameClass ScopeModel::classify(const std::string& name, int scope, int* resolved) const {
    for (int s = scope; s >= 0; s = scopes[static_cast<std::size_t>(s)].parent) {
        if (scopes[static_cast<std::size_t>(s)].declares(name)) {
            if (resolved) *resolved = s;
            return s == scope ? NameClass::Local : NameClass::Outer;
        }
    }
    if (resolved) *resolved = -1;
    return is_builtin_name(name) ? NameClass::Builtin : NameClass::Free;
}

const NameUse* ScopeModel::use_of(const Node* identifier) const {
    const auto it = use_index_.find(identifier);
    return it == use_index_.end() ? nullptr : &uses[it->second];
}

int ScopeModel::add_scope(FunctionScope scope) {
    const int index = static_cast<int>(scopes.size());
    scope_index_[scope.node] = index;
    scopes.push_back(std::move(scope));
    return index;
}

void ScopeModel::add_use(NameUse use) {
    use_index_.try_emplace(use.node, uses.size());
    uses.push_back(std::move(use));
}

namespace {

class Builder {
public:
    explicit Builder(ScopeModel& model) : model_(model) {}

    int open(const Node& node, int parent) {
        FunctionScope scope;
        scope.node = &node;
        scope.parent = parent;
        const Node& body = node.kind == NodeKind::Program ? node : node.body();
        if (node.is_function()) {
            scope.params = node.names;
            if (node.kind == NodeKind::FunctionExpr) scope.self_name = node.name;
        }
        const auto hoisted = runtime::hoist_declarations(body);
        scope.vars = hoisted.var_names;
        for (const Node* fn : hoisted.functions) scope.functions.push_back(fn->name);
        return model_.add_scope(std::move(scope));
    }

    void visit_children(const Node& node, int scope) {
        for (const auto& child : node.children) {
            if (child) visit(*child, scope);
        }
    }

    void record(const Node& node, const std::string& name, int scope, bool is_write) {
        NameUse use;
        use.node = &node;
        use.name = name;
        use.scope = scope;
        use.is_write = is_write;
        use.cls = model_.classify(name, scope, &use.resolved_scope);
        model_.add_use(std::move(use));
    }

    void visit(const Node& node, int scope) {
        switch (node.kind) {
            case NodeKind::FunctionDecl:
            case NodeKind::FunctionExpr: {
                const int inner = open(node, scope);
                visit_children(node.body(), inner);
                return;
            }
            case NodeKind::Identifier:
                record(node, node.name, scope, false);
                return;
            case NodeKind::Assign: {
                const Node& target = *node.child(0);
                if (target.kind == NodeKind::Identifier) {
                    record(target, target.name, scope, true);
                } else {
                    visit(target, scope);
                }
                visit(*node.child(1), scope);
                return;
            }
            case NodeKind::Unary:
                if ((node.op == "++" || node.op == "--") && node.child(0)->kind == NodeKind::Identifier) {
                    record(*node.child(0), node.child(0)->name, scope, true);
                    return;
                }
                break;
            case NodeKind::ForIn: {
                const Node& target = *node.child(0);
                if (target.kind == NodeKind::Identifier) {
                    record(target, target.name, scope, true);
                } else {
                    visit(target, scope);
                }
                visit(*node.child(1), scope);
                visit(*node.child(2), scope);
                return;
            }
            default:
                break;
        }
        visit_children(node, scope);
    }

private:
    ScopeModel& model_;
};

}  // namespace

ScopeModel build_scope_model(const Node& program) {
    ScopeModel model;
    Builder builder(model);
    const int root = builder.open(program, -1);
    builder.visit_children(program, root);
    return model;
}

}  // namespace jssec::lint
