#include "jssec/runtime/coercion.hpp"

#include <cmath>

#include "jssec/runtime/errors.hpp"
#include "jssec/runtime/object_model.hpp"
#include "jssec/syntax/numbers.hpp"

namespace jssec::runtime {

bool to_boolean(const Value& v) {
    switch (v.tag()) {
        case Tag::Undefined:
        case Tag::Null: return false;
        case Tag::Boolean: return v.as_boolean();
        case Tag::Number: return !(v.as_number() == 0 || std::isnan(v.as_number()));
        case Tag::String: return !v.as_string().empty();
        case Tag::Object: return true;
    }
    return true;
}

Value to_primitive(Invoker& invoker, const Value& v, Hint hint) {
    if (v.is_primitive()) return v;
    Object& obj = *v.as_object();
    const char* order[2] = {"valueOf", "toString"};
    if (hint == Hint::String) std::swap(order[0], order[1]);
    for (const char* name : order) {
        const Value method = get_property(invoker, obj, name);
        if (!method.is_callable()) continue;
        Value result = invoker.call(method, v, {});
        if (result.is_primitive()) return result;
    }
    throw RuntimeError(ErrorCode::Coercion, "cannot convert object to primitive value");
}

double primitive_to_number(const Value& v) {
    switch (v.tag()) {
        case Tag::Undefined: return std::nan("");
        case Tag::Null: return 0;
        case Tag::Boolean: return v.as_boolean() ? 1 : 0;
        case Tag::Number: return v.as_number();
        case Tag::String: return syntax::string_to_number(v.as_string());
        case Tag::Object: break;
    }
    throw RuntimeError(ErrorCode::Coercion, "object passed where a primitive was required");
}

std::string primitive_to_string(const Value& v) {
    switch (v.tag()) {
        case Tag::Undefined: return "undefined";
        case Tag::Null: return "null";
        case Tag::Boolean: return v.as_boolean() ? "true" : "false";
        case Tag::Number: return syntax::number_to_string(v.as_number());
        case Tag::String: return v.as_string();
        case Tag::Object: break;
    }
    throw RuntimeError(ErrorCode::Coercion, "object passed where a primitive was required");
}

double to_number(Invoker& invoker, const Value& v) {
    return primitive_to_number(to_primitive(invoker, v, Hint::Number));
}

std::string to_string(Invoker& invoker, const Value& v) {
    return primitive_to_string(to_primitive(invoker, v, Hint::String));
}

std::string to_property_key(Invoker& invoker, const Value& v) {
    if (v.is_string()) return v.as_string();
    return to_string(invoker, v);
}

bool strict_equals(const Value& a, const Value& b) {
    if (a.tag() != b.tag()) return false;
    switch (a.tag()) {
        case Tag::Undefined:
        case Tag::Null: return true;
        case Tag::Boolean: return a.as_boolean() == b.as_boolean();
        case Tag::Number: return a.as_number() == b.as_number();  // NaN != NaN, +0 == -0
        case Tag::String: return a.as_string() == b.as_string();
        case Tag::Object: return a.as_object() == b.as_object();
    }
    return false;
}

bool abstract_equals(Invoker& invoker, const Value& a, const Value& b) {
    if (a.tag() == b.tag()) return strict_equals(a, b);
    if (a.is_nullish() && b.is_nullish()) return true;
    if (a.is_number() && b.is_string()) return a.as_number() == primitive_to_number(b);
    if (a.is_string() && b.is_number()) return primitive_to_number(a) == b.as_number();
    if (a.is_boolean()) return abstract_equals(invoker, Value(primitive_to_number(a)), b);
    if (b.is_boolean()) return abstract_equals(invoker, a, Value(primitive_to_number(b)));
    if ((a.is_string() || a.is_number()) && b.is_object()) {
        return abstract_equals(invoker, a, to_primitive(invoker, b));
    }
    if (a.is_object() && (b.is_string() || b.is_number())) {
        return abstract_equals(invoker, to_primitive(invoker, a), b);
    }
    return false;
}

Value add_operator(Invoker& invoker, const Value& a, const Value& b) {
    const Value left = to_primitive(invoker, a);
    const Value right = to_primitive(invoker, b);
    if (left.is_string() || right.is_string()) {
        return Value(primitive_to_string(left) + primitive_to_string(right));
    }
    return Value(primitive_to_number(left) + primitive_to_number(right));
}

std::optional<bool> abstract_less_than(Invoker& invoker, const Value& a, const Value& b, bool left_first) {
    Value left;
    Value right;
    if (left_first) {
        left = to_primitive(invoker, a, Hint::Number);
        right = to_primitive(invoker, b, Hint::Number);
    } else {
        right = to_primitive(invoker, b, Hint::Number);
        left = to_primitive(invoker, a, Hint::Number);
    }
    if (left.is_string() && right.is_string()) return left.as_string() < right.as_string();
    const double x = primitive_to_number(left);
    const double y = primitive_to_number(right);
    if (std::isnan(x) || std::isnan(y)) return std::nullopt;
    return x < y;
}

std::string typeof_name(const Value& v) {
    switch (v.tag()) {
        case Tag::Undefined: return "undefined";
        case Tag::Null: return "object";
        case Tag::Boolean: return "boolean";
        case Tag::Number: return "number";
        case Tag::String: return "string";
        case Tag::Object: return v.is_callable() ? "function" : "object";
    }
    return "object";
}

}  // namespace jssec::runtime
