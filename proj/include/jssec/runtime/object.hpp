#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "jssec/runtime/value.hpp"
#include "jssec/syntax/ast.hpp"

namespace jssec::runtime {

class Scope;

// Calls back into whatever executes function bodies. The object model needs
// it for accessor properties and coercion hooks.
class Invoker {
public:
    virtual ~Invoker() = default;
    virtual Value call(const Value& callee, const Value& this_value, std::span<const Value> args) = 0;
};

struct DataProperty {
    Value value;
    bool writable = false;
};

struct AccessorProperty {
    Value getter;  // function or undefined
    Value setter;  // function or undefined
};

// A complete descriptor: data xor accessor, flags default to false.
struct PropertyDescriptor {
    std::variant<DataProperty, AccessorProperty> slot;
    bool enumerable = false;
    bool configurable = false;

    static PropertyDescriptor data(Value value, bool writable, bool enumerable, bool configurable) {
        return {DataProperty{std::move(value), writable}, enumerable, configurable};
    }
    static PropertyDescriptor accessor(Value getter, Value setter, bool enumerable, bool configurable) {
        return {AccessorProperty{std::move(getter), std::move(setter)}, enumerable, configurable};
    }
    // {value, writable, enumerable, configurable} all true: what assignment creates.
    static PropertyDescriptor plain(Value value) { return data(std::move(value), true, true, true); }

    bool is_data() const { return std::holds_alternative<DataProperty>(slot); }
    bool is_accessor() const { return std::holds_alternative<AccessorProperty>(slot); }
    DataProperty& as_data() { return std::get<DataProperty>(slot); }
    const DataProperty& as_data() const { return std::get<DataProperty>(slot); }
    const AccessorProperty& as_accessor() const { return std::get<AccessorProperty>(slot); }
};

// The fields a defineProperty call actually mentions. Absent fields keep the
// existing attribute on reconfiguration, or default to false/undefined on
// creation.
struct DescriptorFields {
    std::optional<Value> value;
    std::optional<bool> writable;
    std::optional<Value> getter;
    std::optional<Value> setter;
    std::optional<bool> enumerable;
    std::optional<bool> configurable;

    bool is_accessor_form() const { return getter.has_value() || setter.has_value(); }
    bool is_data_form() const { return value.has_value() || writable.has_value(); }
    bool is_generic_form() const { return !is_accessor_form() && !is_data_form(); }

    static DescriptorFields from(const PropertyDescriptor& desc);
};

// Insertion-ordered string-keyed property table.
class PropertyMap {
public:
    struct Entry {
        std::string key;
        PropertyDescriptor descriptor;
    };

    PropertyDescriptor* find(const std::string& key);
    const PropertyDescriptor* find(const std::string& key) const;
    bool contains(const std::string& key) const { return index_.contains(key); }
    // Inserts at the end, or replaces in place when the key exists.
    void put(const std::string& key, PropertyDescriptor descriptor);
    bool erase(const std::string& key);
    std::size_t size() const { return index_.size(); }

    template <typename F>
    void for_each(F&& f) const {
        for (const auto& slot : entries_) {
            if (slot) f(slot->key, slot->descriptor);
        }
    }
    template <typename F>
    void for_each_mut(F&& f) {
        for (auto& slot : entries_) {
            if (slot) f(slot->key, slot->descriptor);
        }
    }
    std::vector<std::string> keys() const;

private:
    void compact();

    std::vector<std::optional<Entry>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t tombstones_ = 0;
};

struct ScriptFunction {
    const syntax::Node* node = nullptr;             // FunctionDecl or FunctionExpr
    std::shared_ptr<const syntax::Node> program;    // keeps `node` alive
    Scope* closure = nullptr;
};

using NativeCall = std::function<Value(Invoker&, const Value& this_value, std::span<const Value> args)>;

struct NativeFunction {
    std::string builtin_id;
    NativeCall call;
    NativeCall construct;  // empty: not usable with `new`; this_value is undefined
};

using FunctionPayload = std::variant<ScriptFunction, NativeFunction>;

enum class ObjectClass { Ordinary, Function, Array, Global };

class Object {
public:
    Object(ObjectClass cls, Object* prototype) : class_(cls), prototype_(prototype) {}

    Object(const Object&) = delete;
    Object& operator=(const Object&) = delete;

    ObjectClass object_class() const { return class_; }
    bool is_array() const { return class_ == ObjectClass::Array; }
    bool is_global() const { return class_ == ObjectClass::Global; }

    Object* prototype() const { return prototype_; }
    // Throws RuntimeError(ProtoCycle) if `this` is reachable from `prototype`.
    void set_prototype(Object* prototype);

    bool extensible() const { return extensible_; }
    void clear_extensible() { extensible_ = false; }

    PropertyMap& properties() { return properties_; }
    const PropertyMap& properties() const { return properties_; }

    bool is_callable() const { return function_.has_value(); }
    const FunctionPayload* function() const { return function_ ? &*function_ : nullptr; }
    void set_function(FunctionPayload payload) { function_ = std::move(payload); }

private:
    ObjectClass class_;
    Object* prototype_;
    bool extensible_ = true;
    PropertyMap properties_;
    std::optional<FunctionPayload> function_;
};

// Owns every object of a realm. Objects live as long as the store.
class ObjectStore {
public:
    Object* allocate(ObjectClass cls, Object* prototype);
    std::size_t size() const { return objects_.size(); }

private:
    std::vector<std::unique_ptr<Object>> objects_;
};

}  // namespace jssec::runtime
