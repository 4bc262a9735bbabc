#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jssec/runtime/value.hpp"

namespace jssec::runtime {

class Object;

// One frame of the environment chain. Declarative frames hold bindings in
// declaration order; object frames (the global object, `with`) resolve names
// through an object's properties, inherited ones included.
class Scope {
public:
    enum class Kind { Declarative, Object };

    Scope(Kind kind, Scope* outer, Value this_value, bool variable_scope, Object* object = nullptr)
        : kind_(kind), outer_(outer), this_value_(std::move(this_value)),
          variable_scope_(variable_scope), object_(object) {}

    Kind kind() const { return kind_; }
    Scope* outer() const { return outer_; }
    const Value& this_value() const { return this_value_; }
    // Function bodies and the global frame receive hoisted declarations.
    bool is_variable_scope() const { return variable_scope_; }
    Object* object() const { return object_; }

    // Declarative frames only.
    std::vector<std::pair<std::string, Value>>& bindings() { return bindings_; }
    const std::vector<std::pair<std::string, Value>>& bindings() const { return bindings_; }
    long find(const std::string& name) const {
        for (std::size_t i = 0; i < bindings_.size(); ++i) {
            if (bindings_[i].first == name) return static_cast<long>(i);
        }
        return -1;
    }
    // Creates or overwrites.
    void bind(const std::string& name, Value value) {
        const long i = find(name);
        if (i >= 0) {
            bindings_[static_cast<std::size_t>(i)].second = std::move(value);
        } else {
            bindings_.emplace_back(name, std::move(value));
        }
    }

private:
    Kind kind_;
    Scope* outer_;
    Value this_value_;
    bool variable_scope_;
    Object* object_;
    std::vector<std::pair<std::string, Value>> bindings_;
};

}  // namespace jssec::runtime
