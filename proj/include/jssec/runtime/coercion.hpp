#pragma once

#include <optional>
#include <string>

#include "jssec/runtime/object.hpp"

namespace jssec::runtime {

enum class Hint { None, Number, String };

// False exactly for undefined, null, false, +0, -0, NaN and "".
bool to_boolean(const Value& v);

// Objects try valueOf then toString (toString first for Hint::String) and
// take the first primitive result. Throws RuntimeError(Coercion) otherwise.
Value to_primitive(Invoker& invoker, const Value& v, Hint hint = Hint::None);

double to_number(Invoker& invoker, const Value& v);
std::string to_string(Invoker& invoker, const Value& v);
// Primitive-only conversions, no user code involved.
double primitive_to_number(const Value& v);
std::string primitive_to_string(const Value& v);

std::string to_property_key(Invoker& invoker, const Value& v);

bool abstract_equals(Invoker& invoker, const Value& a, const Value& b);
bool strict_equals(const Value& a, const Value& b);

// `+`: concatenates when either primitive operand is a string, else adds.
Value add_operator(Invoker& invoker, const Value& a, const Value& b);

// a < b; nullopt when either side converts to NaN.
std::optional<bool> abstract_less_than(Invoker& invoker, const Value& a, const Value& b, bool left_first = true);

std::string typeof_name(const Value& v);

}  // namespace jssec::runtime
