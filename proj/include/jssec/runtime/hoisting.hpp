#pragma once

#include <string>
#include <vector>

#include "jssec/syntax/ast.hpp"

namespace jssec::runtime {

struct HoistedDeclarations {
    std::vector<std::string> var_names;              // first-occurrence order, unique
    std::vector<const syntax::Node*> functions;      // FunctionDecl nodes in source order
};

// Collects `var` names and function declarations of a Program or function
// body, looking into nested blocks and loops but not nested functions.
HoistedDeclarations hoist_declarations(const syntax::Node& body);

}  // namespace jssec::runtime
