#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "jssec/syntax/ast.hpp"

namespace jssec::lint {

enum class NameClass { Local, Outer, Free, Builtin };

std::string_view to_string(NameClass cls);

// Names visible without declaration: the global object and the builtins it
// carries.
bool is_builtin_name(const std::string& name);

// Declarations of the program (index 0) or of one function.
struct FunctionScope {
    const syntax::Node* node = nullptr;  // Program, FunctionDecl or FunctionExpr
    int parent = -1;
    std::string self_name;  // named function expression
    std::vector<std::string> params;
    std::vector<std::string> vars;
    std::vector<std::string> functions;

    bool declares(const std::string& name) const;
};

struct NameUse {
    const syntax::Node* node = nullptr;  // the Identifier (or the VarDecl / ForIn for declarations)
    std::string name;
    int scope = 0;           // scope the use occurs in
    int resolved_scope = -1; // declaring scope, -1 for free and builtin names
    NameClass cls = NameClass::Free;
    bool is_write = false;
};

class ScopeModel {
public:
    std::vector<FunctionScope> scopes;
    std::vector<NameUse> uses;

    // Scope index of a Program or function node, -1 if unknown.
    int scope_of(const syntax::Node* node) const;
    // Resolution of `name` as seen from `scope`.
    NameClass classify(const std::string& name, int scope, int* resolved = nullptr) const;
    const NameUse* use_of(const syntax::Node* identifier) const;

    int add_scope(FunctionScope scope);
    void add_use(NameUse use);

private:
    std::unordered_map<const syntax::Node*, int> scope_index_;
    std::unordered_map<const syntax::Node*, std::size_t> use_index_;
};

ScopeModel build_scope_model(const syntax::Node& program);

}  // namespace jssec::lint
