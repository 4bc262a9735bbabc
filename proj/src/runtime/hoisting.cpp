#include "jssec/runtime/hoisting.hpp"

#include <algorithm>

namespace jssec::runtime {

using syntax::Node;
using syntax::NodeKind;

HoistedDeclarations hoist_declarations(const Node& body) {
    HoistedDeclarations out;
    auto add_var = [&out](const std::string& name) {
        if (std::find(out.var_names.begin(), out.var_names.end(), name) == out.var_names.end()) {
            out.var_names.push_back(name);
        }
    };
    for (const auto& statement : body.children) {
        syntax::walk(*statement, [&](const Node& node) {
            switch (node.kind) {
                case NodeKind::FunctionDecl:
                    out.functions.push_back(&node);
                    return false;
                case NodeKind::FunctionExpr:
                    return false;
                case NodeKind::VarDecl:
                    for (const auto& name : node.names) add_var(name);
                    return true;
                default:
                    return true;
            }
        });
    }
    return out;
}

}  // namespace jssec::runtime
