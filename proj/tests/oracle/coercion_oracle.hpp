#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "jssec/runtime/value.hpp"

namespace jssec::testing {

// One frozen result recorded from a production engine.
struct Expected {
    enum class Kind { String, Number, NaN, Boolean };
    Kind kind;
    std::string text;
    double number = 0;
    bool flag = false;

    static Expected str(const char* s) { return {Kind::String, s, 0, false}; }
    static Expected num(double n) { return {Kind::Number, {}, n, false}; }
    static Expected nan() { return {Kind::NaN, {}, 0, false}; }
    static Expected boolean(bool b) { return {Kind::Boolean, {}, 0, b}; }

    // Numbers compare with SameValue so that -0 and +0 stay distinct.
    bool matches(const runtime::Value& v) const {
        switch (kind) {
            case Kind::String: return v.is_string() && v.as_string() == text;
            case Kind::NaN: return v.is_number() && std::isnan(v.as_number());
            case Kind::Boolean: return v.is_boolean() && v.as_boolean() == flag;
            case Kind::Number:
                return v.is_number() && v.as_number() == number &&
                       std::signbit(v.as_number()) == std::signbit(number);
        }
        return false;
    }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

#include "coercion_table.inc"

inline std::array<runtime::Value, 12> coercion_pool() {
    return {runtime::Value(), runtime::Value(runtime::Null{}), runtime::Value(true), runtime::Value(false),
            runtime::Value(-0.0), runtime::Value(0.0), runtime::Value(1.0),
            runtime::Value(std::numeric_limits<double>::quiet_NaN()), runtime::Value(""), runtime::Value("0"),
            runtime::Value("1"), runtime::Value("abc")};
}

inline const std::array<const char*, 12> kPoolSource{
    "undefined", "null", "true", "false", "-0", "0", "1", "(0/0)", "\"\"", "\"0\"", "\"1\"", "\"abc\""};

}  // namespace jssec::testing
