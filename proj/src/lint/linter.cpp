#include "jssec/lint/linter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "jssec/syntax/parser.hpp"

namespace jssec::lint {

using syntax::Node;
using syntax::NodeKind;

namespace {

bool is_capitalized(const std::string& name) {
    return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}

// Static property name of a Member, or of an Index with a string literal key.
const std::string* property_name(const Node& node) {
    if (node.kind == NodeKind::Member) return &node.name;
    if (node.kind == NodeKind::Index) {
        const Node* key = node.child(1);
        if (key && key->kind == NodeKind::Literal) return std::get_if<std::string>(&key->literal);
    }
    return nullptr;
}

// Which functions are (heuristically) called without a receiver. Functions
// are known by the names and property keys they are stored under; a call
// `g()` counts for everything reachable from `g` through `var g = f` and
// `var g = x.p` aliases.
class CallGraph {
public:
    explicit CallGraph(const Node& program) {
        syntax::walk(program, [this](const Node& node) {
            collect(node);
            return true;
        });
        resolve();
    }

    bool is_plain_called(const Node* fn) const { return plain_.contains(fn); }
    bool is_function_name(const std::string& name) const { return by_name_.contains(name); }
    const std::set<std::string>& names_of(const Node* fn) const {
        static const std::set<std::string> none;
        const auto it = names_.find(fn);
        return it == names_.end() ? none : it->second;
    }

private:
    void bind_name(const std::string& name, const Node* fn) {
        by_name_[name].push_back(fn);
        names_[fn].insert(name);
    }

    void bind_value(const std::string& name, const Node& value) {
        if (value.kind == NodeKind::FunctionExpr) {
            bind_name(name, &value);
        } else if (value.kind == NodeKind::Identifier) {
            name_aliases_[name].insert(value.name);
        } else if (const std::string* prop = property_name(value)) {
            prop_aliases_[name].insert(*prop);
        }
    }

    void collect(const Node& node) {
        switch (node.kind) {
            case NodeKind::FunctionDecl:
                bind_name(node.name, &node);
                break;
            case NodeKind::FunctionExpr:
                if (!node.name.empty()) bind_name(node.name, &node);
                break;
            case NodeKind::VarDecl:
                for (std::size_t i = 0; i < node.names.size(); ++i) {
                    if (const Node* init = node.child(i)) bind_value(node.names[i], *init);
                }
                break;
            case NodeKind::Assign: {
                const Node& target = *node.child(0);
                const Node& value = *node.child(1);
                if (target.kind == NodeKind::Identifier) {
                    bind_value(target.name, value);
                } else if (const std::string* prop = property_name(target)) {
                    if (value.kind == NodeKind::FunctionExpr) by_prop_[*prop].push_back(&value);
                }
                break;
            }
            case NodeKind::ObjectLiteral:
                for (std::size_t i = 0; i < node.names.size(); ++i) {
                    const Node* value = node.child(i);
                    if (value && value->kind == NodeKind::FunctionExpr) by_prop_[node.names[i]].push_back(value);
                }
                break;
            case NodeKind::Call: {
                const Node& callee = *node.child(0);
                if (callee.kind == NodeKind::Identifier) called_names_.insert(callee.name);
                if (callee.kind == NodeKind::FunctionExpr) plain_.insert(&callee);
                break;
            }
            default:
                break;
        }
    }

    void resolve() {
        std::vector<std::string> work(called_names_.begin(), called_names_.end());
        std::set<std::string> done;
        while (!work.empty()) {
            const std::string name = work.back();
            work.pop_back();
            if (!done.insert(name).second) continue;
            if (auto it = by_name_.find(name); it != by_name_.end()) plain_.insert(it->second.begin(), it->second.end());
            if (auto it = name_aliases_.find(name); it != name_aliases_.end()) {
                work.insert(work.end(), it->second.begin(), it->second.end());
            }
            if (auto it = prop_aliases_.find(name); it != prop_aliases_.end()) {
                for (const auto& prop : it->second) {
                    if (auto fns = by_prop_.find(prop); fns != by_prop_.end()) {
                        plain_.insert(fns->second.begin(), fns->second.end());
                    }
                }
            }
        }
    }

    std::map<std::string, std::vector<const Node*>> by_name_;
    std::map<std::string, std::vector<const Node*>> by_prop_;
    std::map<const Node*, std::set<std::string>> names_;
    std::map<std::string, std::set<std::string>> name_aliases_;
    std::map<std::string, std::set<std::string>> prop_aliases_;
    std::set<std::string> called_names_;
    std::unordered_set<const Node*> plain_;
};

class Linter {
public:
    Linter(const Node& program, const ScopeModel& model, const RuleConfig& config, const std::string& file)
        : model_(model), config_(config), file_(file), calls_(program) {}

    std::vector<Diagnostic> run(const Node& program) {
        for (const auto& child : program.children) {
            if (child) visit(*child, 0, nullptr);
        }
        sort_diagnostics(out_);
        return std::move(out_);
    }

private:
    void report(const char* rule, const Node& at, std::string message) {
        if (!config_.is_enabled(rule)) return;
        out_.push_back(Diagnostic{rule, Severity::Warning, at.span, std::move(message), file_});
    }

    bool receiverless(const Node* fn) const { return fn == nullptr || calls_.is_plain_called(fn); }

    void check_write(const Node& site, const Node& target, const Node* fn) {
        if (target.kind == NodeKind::Identifier) {
            const NameUse* use = model_.use_of(&target);
            if (use && use->cls == NameClass::Free) {
                report("W001", site, "assignment to undeclared variable '" + target.name + "' creates a global");
            }
        } else if (const std::string* prop = property_name(target)) {
            if (target.child(0)->kind == NodeKind::This && receiverless(fn)) {
                report("W001", site,
                       "'this." + *prop + "' is assigned where 'this' is window, which creates a global");
            }
        }
    }

    void visit_children(const Node& node, int scope, const Node* fn) {
        for (const auto& child : node.children) {
            if (child) visit(*child, scope, fn);
        }
    }

    void visit(const Node& node, int scope, const Node* fn) {
        switch (node.kind) {
            case NodeKind::FunctionDecl:
            case NodeKind::FunctionExpr: {
                const int inner = model_.scope_of(&node);
                visit_children(node.body(), inner, &node);
                return;
            }
            case NodeKind::Assign:
                check_write(node, *node.child(0), fn);
                break;
            case NodeKind::Unary:
                if (node.op == "++" || node.op == "--") check_write(node, *node.child(0), fn);
                break;
            case NodeKind::ForIn:
                check_write(*node.child(0), *node.child(0), fn);
                break;
            case NodeKind::With:
                report("W002", node, "'with' makes name resolution depend on the properties of its object");
                break;
            case NodeKind::Call:
                check_call(node, scope);
                break;
            case NodeKind::This:
                if (fn == nullptr) {
                    report("W004", node, "'this' at top level is window");
                } else if (calls_.is_plain_called(fn)) {
                    report("W004", node, "'this' is window here because the function is called without a receiver");
                }
                break;
            case NodeKind::Binary:
                if (node.op == "==" || node.op == "!=") {
                    report("W005", node, "'" + node.op + "' converts its operands; use '" + node.op + "='");
                }
                break;
            case NodeKind::VarDecl:
                check_self_initialization(node, scope);
                break;
            case NodeKind::Member:
            case NodeKind::Index:
                if (const std::string* prop = property_name(node); prop && *prop == "__proto__") {
                    report("W008", node, "'__proto__' is a non-standard property");
                }
                break;
            case NodeKind::Return:
                check_constructor_return(node, fn);
                break;
            default:
                break;
        }
        visit_children(node, scope, fn);
    }

    void check_call(const Node& call, int scope) {
        const Node& callee = *call.child(0);
        if (callee.kind == NodeKind::Identifier) {
            if (callee.name == "eval" && model_.classify("eval", scope) == NameClass::Builtin) {
                report("W006", call, "eval executes code built from a string");
            }
            const NameClass cls = model_.classify(callee.name, scope);
            if (is_capitalized(callee.name) && (cls == NameClass::Local || cls == NameClass::Outer) &&
                calls_.is_function_name(callee.name)) {
                report("W003", call, "'" + callee.name + "' looks like a constructor but is called without 'new'");
            }
            return;
        }
        const std::string* prop = property_name(callee);
        if (!prop) return;
        if (*prop == "eval") {
            report("W006", call, "eval executes code built from a string");
        } else if ((*prop == "call" || *prop == "apply") && callee.child(0)->kind == NodeKind::Identifier &&
                   callee.child(0)->name == "eval") {
            report("W006", call, "eval executes code built from a string");
        }
    }

    void check_self_initialization(const Node& decl, int scope) {
        const FunctionScope& current = model_.scopes[static_cast<std::size_t>(scope)];
        for (std::size_t i = 0; i < decl.names.size(); ++i) {
            const Node* init = decl.child(i);
            if (!init || init->kind != NodeKind::Identifier || init->name != decl.names[i]) continue;
            const std::string& name = decl.names[i];
            bool outer = std::find(current.params.begin(), current.params.end(), name) != current.params.end();
            if (!outer && current.parent >= 0) {
                const NameClass cls = model_.classify(name, current.parent);
                outer = cls == NameClass::Local || cls == NameClass::Outer;
            }
            if (outer) {
                report("W007", decl,
                       "'var " + name + " = " + name + "' reads the hoisted local, not the outer '" + name + "'");
            }
        }
    }

    void check_constructor_return(const Node& ret, const Node* fn) {
        if (!fn) return;
        const Node* value = ret.child(0);
        if (!value || (value->kind != NodeKind::ObjectLiteral && value->kind != NodeKind::New)) return;
        for (const std::string& name : calls_.names_of(fn)) {
            if (is_capitalized(name)) {
                report("W009", ret, "constructor '" + name + "' returns an object, which replaces the one 'new' creates");
                return;
            }
        }
    }

    const ScopeModel& model_;
    const RuleConfig& config_;
    const std::string& file_;
    CallGraph calls_;
    std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> lint_program(const Node& program, const ScopeModel& model, const RuleConfig& config,
                                     const std::string& file) {
    return Linter(program, model, config, file).run(program);
}

std::vector<Diagnostic> lint_source(std::string_view source, const std::string& file, const RuleConfig& config) {
    const syntax::NodePtr program = syntax::parse_program(source);
    const ScopeModel model = build_scope_model(*program);
    return lint_program(*program, model, config, file);
}

}  // namespace jssec::lint
