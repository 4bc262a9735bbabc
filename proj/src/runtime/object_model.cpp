#include "jssec/runtime/object_model.hpp"

#include <cmath>
#include <unordered_set>

#include "jssec/runtime/errors.hpp"
#include "jssec/syntax/numbers.hpp"

namespace jssec::runtime {

namespace {

constexpr std::uint32_t kMaxArrayIndex = 0xFFFFFFFEu;

[[noreturn]] void reject(const std::string& key, const std::string& reason) {
    throw RuntimeError(ErrorCode::Define, "cannot define property '" + key + "': " + reason);
}

void set_array_length_slot(Object& array, std::uint32_t length) {
    auto* desc = array.properties().find("length");
    desc->as_data().value = static_cast<double>(length);
}

// Keeps `length` one past the highest index after an index write.
void note_index_write(Object& obj, const std::string& key) {
    std::uint32_t index = 0;
    if (!obj.is_array() || !is_array_index(key, &index)) return;
    if (index >= array_length(obj)) set_array_length_slot(obj, index + 1);
}

std::uint32_t checked_new_length(const Object& array, const Value& value) {
    if (!value.is_number()) throw RuntimeError(ErrorCode::ArrayLength, "invalid array length");
    const double n = value.as_number();
    if (!(n >= 0) || n != std::floor(n) || n > 4294967295.0) {
        throw RuntimeError(ErrorCode::ArrayLength, "invalid array length");
    }
    const auto length = static_cast<std::uint32_t>(n);
    if (length < array_length(array)) {
        throw RuntimeError(ErrorCode::ArrayLength, "shrinking an array through 'length' is not supported");
    }
    return length;
}

}  // namespace

std::string canonical_key(double index) { return syntax::number_to_string(index); }

bool is_array_index(const std::string& key, std::uint32_t* index) {
    if (key.empty() || key.size() > 10) return false;
    if (key.size() > 1 && key.front() == '0') return false;
    std::uint64_t n = 0;
    for (char c : key) {
        if (c < '0' || c > '9') return false;
        n = n * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (n > kMaxArrayIndex) return false;
    if (index) *index = static_cast<std::uint32_t>(n);
    return true;
}

std::uint32_t array_length(const Object& array) {
    const auto* desc = array.properties().find("length");
    if (!desc || !desc->is_data() || !desc->as_data().value.is_number()) return 0;
    return static_cast<std::uint32_t>(desc->as_data().value.as_number());
}

const PropertyDescriptor* get_own_property(const Object& obj, const std::string& key) {
    return obj.properties().find(key);
}

FoundProperty find_property(const Object& obj, const std::string& key) {
    for (const Object* o = &obj; o; o = o->prototype()) {
        if (const auto* desc = o->properties().find(key)) return {o, desc};
    }
    return {};
}

bool has_property(const Object& obj, const std::string& key) {
    if (key == kProtoKey) return true;
    return find_property(obj, key).descriptor != nullptr;
}

Value get_property(Invoker& invoker, Object& obj, const std::string& key) {
    if (key == kProtoKey) {
        return obj.prototype() ? Value(obj.prototype()) : Value(Null{});
    }
    const auto found = find_property(obj, key);
    if (!found.descriptor) return {};
    if (found.descriptor->is_data()) return found.descriptor->as_data().value;
    // Copy before calling: the getter may reshape the property table.
    const Value getter = found.descriptor->as_accessor().getter;
    if (getter.is_undefined()) return {};
    return invoker.call(getter, Value(&obj), {});
}

bool set_property(Invoker& invoker, Object& obj, const std::string& key, const Value& value) {
    if (key == kProtoKey) return false;

    if (auto* own = obj.properties().find(key)) {
        if (own->is_accessor()) {
            const Value setter = own->as_accessor().setter;
            if (setter.is_undefined()) return false;
            const Value args[] = {value};
            invoker.call(setter, Value(&obj), args);
            return true;
        }
        if (!own->as_data().writable) return false;
        if (obj.is_array() && key == "length") {
            set_array_length_slot(obj, checked_new_length(obj, value));
            return true;
        }
        own->as_data().value = value;
        return true;
    }

    if (obj.prototype()) {
        const auto inherited = find_property(*obj.prototype(), key);
        if (inherited.descriptor) {
            if (inherited.descriptor->is_accessor()) {
                const Value setter = inherited.descriptor->as_accessor().setter;
                if (setter.is_undefined()) return false;
                const Value args[] = {value};
                invoker.call(setter, Value(&obj), args);
                return true;
            }
            if (!inherited.descriptor->as_data().writable) return false;
        }
    }

    if (!obj.extensible()) return false;
    obj.properties().put(key, PropertyDescriptor::plain(value));
    note_index_write(obj, key);
    return true;
}

bool delete_property(Object& obj, const std::string& key) {
    const auto* own = obj.properties().find(key);
    if (!own) return true;
    if (!own->configurable) return false;
    obj.properties().erase(key);
    return true;
}

Object& define_property(Object& obj, const std::string& key, const DescriptorFields& desc) {
    if (key == kProtoKey) reject(key, "the prototype link is not a property");
    if (desc.is_accessor_form() && desc.is_data_form()) {
        reject(key, "a descriptor cannot have both accessors and a value or writable flag");
    }
    for (const auto* fn : {&desc.getter, &desc.setter}) {
        if (*fn && !(*fn)->is_undefined() && !(*fn)->is_callable()) {
            reject(key, "getter and setter must be functions");
        }
    }

    auto* current = obj.properties().find(key);
    if (!current) {
        if (!obj.extensible()) reject(key, "object is not extensible");
        PropertyDescriptor created;
        if (desc.is_accessor_form()) {
            created.slot = AccessorProperty{desc.getter.value_or(Value{}), desc.setter.value_or(Value{})};
        } else {
            created.slot = DataProperty{desc.value.value_or(Value{}), desc.writable.value_or(false)};
        }
        created.enumerable = desc.enumerable.value_or(false);
        created.configurable = desc.configurable.value_or(false);
        if (obj.is_array() && key == "length") reject(key, "arrays always carry a length");
        obj.properties().put(key, std::move(created));
        note_index_write(obj, key);
        return obj;
    }

    if (!current->configurable) {
        if (desc.configurable.value_or(false)) reject(key, "property is not configurable");
        if (desc.enumerable && *desc.enumerable != current->enumerable) {
            reject(key, "property is not configurable");
        }
    }

    if (!desc.is_generic_form() && current->is_data() != desc.is_data_form()) {
        if (!current->configurable) reject(key, "property is not configurable");
        if (desc.is_data_form()) {
            current->slot = DataProperty{};
        } else {
            current->slot = AccessorProperty{};
        }
    } else if (current->is_data() && desc.is_data_form()) {
        const auto& data = current->as_data();
        if (!current->configurable && !data.writable) {
            if (desc.writable.value_or(false)) reject(key, "property is not writable");
            if (desc.value && !desc.value->same_value(data.value)) reject(key, "property is not writable");
        }
    } else if (current->is_accessor() && desc.is_accessor_form()) {
        const auto& acc = current->as_accessor();
        if (!current->configurable) {
            if (desc.getter && !desc.getter->same_value(acc.getter)) reject(key, "property is not configurable");
            if (desc.setter && !desc.setter->same_value(acc.setter)) reject(key, "property is not configurable");
        }
    }

    if (obj.is_array() && key == "length" && desc.value) {
        set_array_length_slot(obj, checked_new_length(obj, *desc.value));
    } else if (desc.value) {
        current->as_data().value = *desc.value;
    }
    if (desc.writable) current->as_data().writable = *desc.writable;
    if (desc.getter) std::get<AccessorProperty>(current->slot).getter = *desc.getter;
    if (desc.setter) std::get<AccessorProperty>(current->slot).setter = *desc.setter;
    if (desc.enumerable) current->enumerable = *desc.enumerable;
    if (desc.configurable) current->configurable = *desc.configurable;
    return obj;
}

Object& define_property(Object& obj, const std::string& key, const PropertyDescriptor& desc) {
    return define_property(obj, key, DescriptorFields::from(desc));
}

Object* create_object(ObjectStore& store, const Value& proto) {
    if (proto.is_object()) return store.allocate(ObjectClass::Ordinary, proto.as_object());
    if (proto.is_null()) return store.allocate(ObjectClass::Ordinary, nullptr);
    throw RuntimeError(ErrorCode::Type, "object prototype may only be an object or null");
}

void prevent_extensions(Object& obj) { obj.clear_extensible(); }

bool is_extensible(const Object& obj) { return obj.extensible(); }

void freeze(Object& obj) {
    obj.properties().for_each_mut([](const std::string&, PropertyDescriptor& desc) {
        if (desc.is_data()) desc.as_data().writable = false;
        desc.configurable = false;
    });
    obj.clear_extensible();
}

bool is_frozen(const Object& obj) {
    if (obj.extensible()) return false;
    bool frozen = true;
    obj.properties().for_each([&frozen](const std::string&, const PropertyDescriptor& desc) {
        if (desc.configurable || (desc.is_data() && desc.as_data().writable)) frozen = false;
    });
    return frozen;
}

bool is_prototype_of(const Object& candidate, const Value& obj) {
    if (!obj.is_object()) return false;
    for (const Object* p = obj.as_object()->prototype(); p; p = p->prototype()) {
        if (p == &candidate) return true;
    }
    return false;
}

std::vector<std::string> enumerate_keys(const Object& obj) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const Object* o = &obj; o; o = o->prototype()) {
        o->properties().for_each([&](const std::string& key, const PropertyDescriptor& desc) {
            if (!seen.insert(key).second) return;
            if (desc.enumerable) out.push_back(key);
        });
    }
    return out;
}

}  // namespace jssec::runtime
