#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace jssec::runtime {

class Object;

struct Undefined {
    bool operator==(const Undefined&) const = default;
};
struct Null {
    bool operator==(const Null&) const = default;
};

enum class Tag : std::uint8_t { Undefined, Null, Boolean, Number, String, Object };

// An ECMAScript value. Object payloads are non-owning references into the
// realm's object store.
class Value {
public:
    Value() = default;
    Value(Undefined) {}
    Value(Null) : storage_(Null{}) {}
    Value(bool b) : storage_(b) {}
    Value(double d) : storage_(d) {}
    Value(int n) : storage_(static_cast<double>(n)) {}
    Value(std::string s) : storage_(std::move(s)) {}
    Value(const char* s) : storage_(std::string(s)) {}
    Value(Object* o) : storage_(o) {}

    Tag tag() const { return static_cast<Tag>(storage_.index()); }

    bool is_undefined() const { return tag() == Tag::Undefined; }
    bool is_null() const { return tag() == Tag::Null; }
    bool is_nullish() const { return is_undefined() || is_null(); }
    bool is_boolean() const { return tag() == Tag::Boolean; }
    bool is_number() const { return tag() == Tag::Number; }
    bool is_string() const { return tag() == Tag::String; }
    bool is_object() const { return tag() == Tag::Object; }
    bool is_primitive() const { return !is_object(); }
    bool is_callable() const;

    bool as_boolean() const { return std::get<bool>(storage_); }
    double as_number() const { return std::get<double>(storage_); }
    const std::string& as_string() const { return std::get<std::string>(storage_); }
    Object* as_object() const { return std::get<Object*>(storage_); }

    // Identity-level comparison: same tag and payload, NaN equal to NaN.
    // Not an ECMAScript operator; see strict_equals for that.
    bool same_value(const Value& other) const;

private:
    std::variant<Undefined, Null, bool, double, std::string, Object*> storage_;
};

}  // namespace jssec::runtime
