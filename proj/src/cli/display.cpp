#include "jssec/cli/display.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "jssec/runtime/object_model.hpp"
#include "jssec/syntax/numbers.hpp"

namespace jssec::cli {

using runtime::Object;
using runtime::PropertyDescriptor;
using runtime::Tag;
using runtime::Value;

namespace {

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += '\\';
        out += c;
    }
    out += '\'';
    return out;
}

bool is_identifier_name(const std::string& key) {
    if (key.empty()) return false;
    auto start = [](unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; };
    if (!start(static_cast<unsigned char>(key[0]))) return false;
    return std::all_of(key.begin() + 1, key.end(), [&](char c) {
        return start(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    });
}

std::string render_key(const std::string& key) {
    if (is_identifier_name(key) || runtime::is_array_index(key)) return key;
    return quote(key);
}

class Renderer {
public:
    std::string value(const Value& v) {
        switch (v.tag()) {
            case Tag::Undefined: return "undefined";
            case Tag::Null: return "null";
            case Tag::Boolean: return v.as_boolean() ? "true" : "false";
            case Tag::Number: return syntax::number_to_string(v.as_number());
            case Tag::String: return quote(v.as_string());
            case Tag::Object: return object(*v.as_object());
        }
        return "?";
    }

private:
    std::string slot(const PropertyDescriptor& desc) {
        if (desc.is_data()) return value(desc.as_data().value);
        const auto& accessor = desc.as_accessor();
        const bool get = !accessor.getter.is_undefined();
        const bool set = !accessor.setter.is_undefined();
        if (get && set) return "[getter/setter]";
        return get ? "[getter]" : "[setter]";
    }

    std::string object(const Object& obj) {
        if (obj.is_callable()) return "function";
        if (obj.is_global()) return "[object Window]";
        if (std::find(ancestors_.begin(), ancestors_.end(), &obj) != ancestors_.end()) return "[cycle]";
        ancestors_.push_back(&obj);
        std::string out;
        if (obj.is_array()) {
            out = "[";
            const std::uint32_t length = runtime::array_length(obj);
            for (std::uint32_t i = 0; i < length; ++i) {
                if (i > 0) out += ", ";
                const PropertyDescriptor* desc = runtime::get_own_property(obj, runtime::canonical_key(i));
                out += desc ? slot(*desc) : "undefined";
            }
            out += "]";
        } else {
            out = "{";
            bool first = true;
            obj.properties().for_each([&](const std::string& key, const PropertyDescriptor& desc) {
                if (!desc.enumerable) return;
                if (!first) out += ", ";
                first = false;
                out += render_key(key) + ": " + slot(desc);
            });
            out += "}";
        }
        ancestors_.pop_back();
        return out;
    }

    std::vector<const Object*> ancestors_;
};

}  // namespace

std::string display(const Value& value) {
    return Renderer().value(value);
}

}  // namespace jssec::cli
