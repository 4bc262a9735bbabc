#include "jssec/runtime/object.hpp"

#include <cmath>

#include "jssec/runtime/errors.hpp"

namespace jssec::runtime {

bool Value::is_callable() const { return is_object() && as_object()->is_callable(); }

bool Value::same_value(const Value& other) const {
    if (tag() != other.tag()) return false;
    if (is_number()) {
        const double a = as_number();
        const double b = other.as_number();
        if (std::isnan(a) && std::isnan(b)) return true;
        return a == b && std::signbit(a) == std::signbit(b);
    }
    return storage_ == other.storage_;
}

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnresolvedReference: return "ReferenceError";
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::ArrayLength:
        case ErrorCode::StackOverflow: return "RangeError";
        default: return "TypeError";
    }
}

DescriptorFields DescriptorFields::from(const PropertyDescriptor& desc) {
    DescriptorFields fields;
    fields.enumerable = desc.enumerable;
    fields.configurable = desc.configurable;
    if (desc.is_data()) {
        fields.value = desc.as_data().value;
        fields.writable = desc.as_data().writable;
    } else {
        fields.getter = desc.as_accessor().getter;
        fields.setter = desc.as_accessor().setter;
    }
    return fields;
}

PropertyDescriptor* PropertyMap::find(const std::string& key) {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &entries_[it->second]->descriptor;
}

const PropertyDescriptor* PropertyMap::find(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &entries_[it->second]->descriptor;
}

void PropertyMap::put(const std::string& key, PropertyDescriptor descriptor) {
    if (auto* existing = find(key)) {
        *existing = std::move(descriptor);
        return;
    }
    index_.emplace(key, entries_.size());
    entries_.push_back(Entry{key, std::move(descriptor)});
}

bool PropertyMap::erase(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    entries_[it->second].reset();
    index_.erase(it);
    if (++tombstones_ > 16 && tombstones_ * 2 > entries_.size()) compact();
    return true;
}

std::vector<std::string> PropertyMap::keys() const {
    std::vector<std::string> out;
    out.reserve(size());
    for_each([&out](const std::string& key, const PropertyDescriptor&) { out.push_back(key); });
    return out;
}

void PropertyMap::compact() {
    std::vector<std::optional<Entry>> live;
    live.reserve(index_.size());
    for (auto& slot : entries_) {
        if (!slot) continue;
        index_[slot->key] = live.size();
        live.push_back(std::move(slot));
    }
    entries_ = std::move(live);
    tombstones_ = 0;
}

void Object::set_prototype(Object* prototype) {
    for (const Object* p = prototype; p; p = p->prototype()) {
        if (p == this) throw RuntimeError(ErrorCode::ProtoCycle, "cyclic __proto__ value");
    }
    prototype_ = prototype;
}

Object* ObjectStore::allocate(ObjectClass cls, Object* prototype) {
    objects_.push_back(std::make_unique<Object>(cls, prototype));
    return objects_.back().get();
}

}  // namespace jssec::runtime
