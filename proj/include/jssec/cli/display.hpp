#pragma once

#include <string>

#include "jssec/runtime/value.hpp"

namespace jssec::cli {

// Canonical rendering used by traces and expectation comments:
// undefined, null, true, 4, 'text', [1, 2], {k: v}, function, [object Window].
// Accessor properties render as [getter], [setter] or [getter/setter] and
// are never invoked; a nested reference to an enclosing object is [cycle].
std::string display(const runtime::Value& value);

}  // namespace jssec::cli
