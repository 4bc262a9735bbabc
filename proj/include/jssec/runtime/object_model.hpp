#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jssec/runtime/object.hpp"

namespace jssec::runtime {

// Pseudo-property exposing the prototype link. Readable, never writable.
inline constexpr std::string_view kProtoKey = "__proto__";

const PropertyDescriptor* get_own_property(const Object& obj, const std::string& key);

// Nearest descriptor for `key` along the prototype chain, with its holder.
struct FoundProperty {
    const Object* holder = nullptr;
    const PropertyDescriptor* descriptor = nullptr;
};
FoundProperty find_property(const Object& obj, const std::string& key);

bool has_property(const Object& obj, const std::string& key);

// Own data value, then the prototype chain; getters run with this = obj.
// Missing keys read as undefined.
Value get_property(Invoker& invoker, Object& obj, const std::string& key);

// Non-strict [[Put]]: returns false (and changes nothing) when the write is
// blocked by a read-only property, a setter-less accessor, or a
// non-extensible target. Never writes to a prototype.
bool set_property(Invoker& invoker, Object& obj, const std::string& key, const Value& value);

// True when the key is absent or was removed; false for non-configurable.
bool delete_property(Object& obj, const std::string& key);

// Throws RuntimeError(Define) naming the key and the reason on rejection.
Object& define_property(Object& obj, const std::string& key, const DescriptorFields& desc);
Object& define_property(Object& obj, const std::string& key, const PropertyDescriptor& desc);

// `proto` must be an object or null.
Object* create_object(ObjectStore& store, const Value& proto);

void prevent_extensions(Object& obj);
bool is_extensible(const Object& obj);

void freeze(Object& obj);
bool is_frozen(const Object& obj);

// Strict chain membership: obj itself does not count.
bool is_prototype_of(const Object& candidate, const Value& obj);

// Enumerable keys, own first then inherited, each object in insertion order;
// shadowed keys appear once.
std::vector<std::string> enumerate_keys(const Object& obj);

// Canonical decimal string for array-index style keys.
std::string canonical_key(double index);

// 0 <= n < 2^32 - 1 written canonically.
bool is_array_index(const std::string& key, std::uint32_t* index = nullptr);

std::uint32_t array_length(const Object& array);

}  // namespace jssec::runtime
