#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jssec/runtime/object.hpp"
#include "jssec/runtime/scope.hpp"

namespace jssec::runtime {

struct Intrinsics {
    Object* object_prototype = nullptr;
    Object* function_prototype = nullptr;
    Object* array_prototype = nullptr;
    Object* object_constructor = nullptr;
    Object* function_constructor = nullptr;
    Object* array_constructor = nullptr;
    Object* eval = nullptr;
};

inline constexpr const char* kEvalBuiltinId = "eval";

// One isolated global environment: the window object, intrinsics, every
// object and scope allocated while running code, and the ASTs those objects
// point into.
class Realm {
public:
    static std::unique_ptr<Realm> create();

    Realm(const Realm&) = delete;
    Realm& operator=(const Realm&) = delete;

    Object& window() const { return *window_; }
    const Intrinsics& intrinsics() const { return intrinsics_; }
    ObjectStore& store() { return store_; }
    const ObjectStore& store() const { return store_; }
    Scope* global_scope() const { return global_scope_; }

    Scope* new_declarative_scope(Scope* outer, Value this_value, bool variable_scope);
    Scope* new_object_scope(Object* object, Scope* outer, Value this_value);

    Object* new_object();
    Object* new_array(std::span<const Value> elements = {});
    // Script function with a fresh `prototype` object whose `constructor`
    // points back at it.
    Object* new_function(ScriptFunction fn);
    Object* new_native(std::string builtin_id, NativeCall call, NativeCall construct = {});

    bool is_eval(const Value& v) const;

    void retain(std::shared_ptr<const syntax::Node> program) { programs_.push_back(std::move(program)); }

private:
    Realm() = default;
    void install_builtins();

    ObjectStore store_;
    std::vector<std::unique_ptr<Scope>> scopes_;
    std::vector<std::shared_ptr<const syntax::Node>> programs_;
    Intrinsics intrinsics_;
    Object* window_ = nullptr;
    Scope* global_scope_ = nullptr;
};

// Display of an object's [[Class]] for Object.prototype.toString.
std::string class_string(const Value& v);

}  // namespace jssec::runtime
