#include "jssec/runtime/realm.hpp"

#include <cmath>

#include "jssec/runtime/coercion.hpp"
#include "jssec/runtime/errors.hpp"
#include "jssec/runtime/object_model.hpp"
#include "jssec/syntax/parser.hpp"
#include "jssec/syntax/token.hpp"

namespace jssec::runtime {

namespace {

const Value& arg(std::span<const Value> args, std::size_t i) {
    static const Value undefined;
    return i < args.size() ? args[i] : undefined;
}

Object& require_object(const Value& v, const char* what) {
    if (!v.is_object()) {
        throw RuntimeError(ErrorCode::Type, std::string(what) + " called on non-object");
    }
    return *v.as_object();
}

void install(Object& target, const std::string& key, Value value) {
    define_property(target, key, PropertyDescriptor::data(std::move(value), true, false, true));
}

void install_fixed(Object& target, const std::string& key, Value value) {
    define_property(target, key, PropertyDescriptor::data(std::move(value), false, false, false));
}

DescriptorFields to_descriptor_fields(Invoker& invoker, const Value& v) {
    if (!v.is_object()) throw RuntimeError(ErrorCode::Type, "property description must be an object");
    Object& obj = *v.as_object();
    DescriptorFields out;
    auto field = [&](const char* name) -> std::optional<Value> {
        if (!has_property(obj, name)) return std::nullopt;
        return get_property(invoker, obj, name);
    };
    if (auto f = field("enumerable")) out.enumerable = to_boolean(*f);
    if (auto f = field("configurable")) out.configurable = to_boolean(*f);
    if (auto f = field("value")) out.value = *f;
    if (auto f = field("writable")) out.writable = to_boolean(*f);
    if (auto f = field("get")) {
        if (!f->is_undefined() && !f->is_callable()) throw RuntimeError(ErrorCode::Define, "getter must be a function");
        out.getter = *f;
    }
    if (auto f = field("set")) {
        if (!f->is_undefined() && !f->is_callable()) throw RuntimeError(ErrorCode::Define, "setter must be a function");
        out.setter = *f;
    }
    if (out.is_accessor_form() && out.is_data_form()) {
        throw RuntimeError(ErrorCode::Define, "a property cannot have both accessors and a value or writable attribute");
    }
    return out;
}

std::uint32_t length_of(Invoker& invoker, Object& obj) {
    const double n = to_number(invoker, get_property(invoker, obj, "length"));
    if (!(n > 0) || std::isinf(n)) return 0;
    return static_cast<std::uint32_t>(std::fmod(std::trunc(n), 4294967296.0));
}

std::string join_elements(Invoker& invoker, Object& obj, const std::string& sep) {
    const std::uint32_t len = length_of(invoker, obj);
    std::string out;
    for (std::uint32_t i = 0; i < len; ++i) {
        if (i > 0) out += sep;
        const Value element = get_property(invoker, obj, canonical_key(i));
        if (!element.is_nullish()) out += to_string(invoker, element);
    }
    return out;
}

}  // namespace

std::string class_string(const Value& v) {
    switch (v.tag()) {
        case Tag::Undefined: return "[object Undefined]";
        case Tag::Null: return "[object Null]";
        case Tag::Boolean: return "[object Boolean]";
        case Tag::Number: return "[object Number]";
        case Tag::String: return "[object String]";
        case Tag::Object: break;
    }
    const Object& obj = *v.as_object();
    if (obj.is_global()) return "[object Window]";
    if (obj.is_callable()) return "[object Function]";
    if (obj.is_array()) return "[object Array]";
    return "[object Object]";
}

std::unique_ptr<Realm> Realm::create() {
    std::unique_ptr<Realm> realm(new Realm());
    realm->install_builtins();
    return realm;
}

Scope* Realm::new_declarative_scope(Scope* outer, Value this_value, bool variable_scope) {
    scopes_.push_back(std::make_unique<Scope>(Scope::Kind::Declarative, outer, std::move(this_value), variable_scope));
    return scopes_.back().get();
}

Scope* Realm::new_object_scope(Object* object, Scope* outer, Value this_value) {
    scopes_.push_back(std::make_unique<Scope>(Scope::Kind::Object, outer, std::move(this_value), false, object));
    return scopes_.back().get();
}

Object* Realm::new_object() {
    return store_.allocate(ObjectClass::Ordinary, intrinsics_.object_prototype);
}

Object* Realm::new_array(std::span<const Value> elements) {
    Object* array = store_.allocate(ObjectClass::Array, intrinsics_.array_prototype);
    array->properties().put("length", PropertyDescriptor::data(0.0, true, false, false));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        array->properties().put(canonical_key(static_cast<double>(i)), PropertyDescriptor::plain(elements[i]));
    }
    array->properties().find("length")->as_data().value = static_cast<double>(elements.size());
    return array;
}

Object* Realm::new_function(ScriptFunction fn) {
    Object* function = store_.allocate(ObjectClass::Function, intrinsics_.function_prototype);
    function->set_function(std::move(fn));
    Object* proto = new_object();
    proto->properties().put("constructor", PropertyDescriptor::data(function, true, false, true));
    function->properties().put("prototype", PropertyDescriptor::data(proto, true, false, false));
    return function;
}

Object* Realm::new_native(std::string builtin_id, NativeCall call, NativeCall construct) {
    Object* function = store_.allocate(ObjectClass::Function, intrinsics_.function_prototype);
    function->set_function(NativeFunction{std::move(builtin_id), std::move(call), std::move(construct)});
    return function;
}

bool Realm::is_eval(const Value& v) const {
    return v.is_object() && v.as_object() == intrinsics_.eval;
}

void Realm::install_builtins() {
    Intrinsics& in = intrinsics_;
    in.object_prototype = store_.allocate(ObjectClass::Ordinary, nullptr);
    in.function_prototype = store_.allocate(ObjectClass::Ordinary, in.object_prototype);
    in.array_prototype = store_.allocate(ObjectClass::Ordinary, in.object_prototype);

    window_ = store_.allocate(ObjectClass::Global, in.object_prototype);
    scopes_.push_back(std::make_unique<Scope>(Scope::Kind::Object, nullptr, window_, true, window_));
    global_scope_ = scopes_.back().get();

    Realm* self = this;

    // Object.prototype
    Object& op = *in.object_prototype;
    install(op, "toString", new_native("Object.prototype.toString",
        [](Invoker&, const Value& self_value, std::span<const Value>) -> Value {
            return class_string(self_value);
        }));
    install(op, "valueOf", new_native("Object.prototype.valueOf",
        [](Invoker&, const Value& self_value, std::span<const Value>) -> Value { return self_value; }));
    install(op, "isPrototypeOf", new_native("Object.prototype.isPrototypeOf",
        [](Invoker&, const Value& self_value, std::span<const Value> args) -> Value {
            if (!arg(args, 0).is_object()) return false;
            return is_prototype_of(require_object(self_value, "isPrototypeOf"), arg(args, 0));
        }));

    // Function.prototype
    Object& fp = *in.function_prototype;
    install(fp, "call", new_native("Function.prototype.call",
        [self](Invoker& invoker, const Value& fn, std::span<const Value> args) -> Value {
            if (!fn.is_callable()) throw RuntimeError(ErrorCode::NotCallable, "call invoked on a non-function");
            Value this_value = arg(args, 0);
            if (this_value.is_nullish()) this_value = &self->window();
            return invoker.call(fn, this_value, args.empty() ? args : args.subspan(1));
        }));
    install(fp, "apply", new_native("Function.prototype.apply",
        [self](Invoker& invoker, const Value& fn, std::span<const Value> args) -> Value {
            if (!fn.is_callable()) throw RuntimeError(ErrorCode::NotCallable, "apply invoked on a non-function");
            Value this_value = arg(args, 0);
            if (this_value.is_nullish()) this_value = &self->window();
            const Value& list = arg(args, 1);
            std::vector<Value> spread;
            if (list.is_object() && list.as_object()->is_array()) {
                Object& array = *list.as_object();
                const std::uint32_t len = array_length(array);
                spread.reserve(len);
                for (std::uint32_t i = 0; i < len; ++i) {
                    spread.push_back(get_property(invoker, array, canonical_key(i)));
                }
            } else if (!list.is_nullish()) {
                throw RuntimeError(ErrorCode::ApplyArgs, "second argument to apply must be an array");
            }
            return invoker.call(fn, this_value, spread);
        }));

    // Array.prototype
    Object& ap = *in.array_prototype;
    install(ap, "push", new_native("Array.prototype.push",
        [](Invoker& invoker, const Value& self_value, std::span<const Value> args) -> Value {
            Object& obj = require_object(self_value, "push");
            double len = length_of(invoker, obj);
            for (const Value& item : args) {
                set_property(invoker, obj, canonical_key(len), item);
                len += 1;
            }
            set_property(invoker, obj, "length", len);
            return len;
        }));
    install(ap, "join", new_native("Array.prototype.join",
        [](Invoker& invoker, const Value& self_value, std::span<const Value> args) -> Value {
            Object& obj = require_object(self_value, "join");
            const std::string sep = arg(args, 0).is_undefined() ? "," : to_string(invoker, arg(args, 0));
            return join_elements(invoker, obj, sep);
        }));
    install(ap, "toString", new_native("Array.prototype.toString",
        [](Invoker& invoker, const Value& self_value, std::span<const Value>) -> Value {
            return join_elements(invoker, require_object(self_value, "toString"), ",");
        }));

    // Object
    NativeCall make_object = [self](Invoker&, const Value&, std::span<const Value> args) -> Value {
        if (arg(args, 0).is_object()) return arg(args, 0);
        return self->new_object();
    };
    in.object_constructor = new_native("Object", make_object, make_object);
    Object& oc = *in.object_constructor;
    install_fixed(oc, "prototype", in.object_prototype);
    install(op, "constructor", in.object_constructor);
    install(oc, "create", new_native("Object.create",
        [self](Invoker& invoker, const Value&, std::span<const Value> args) -> Value {
            const Value& proto = arg(args, 0);
            if (!proto.is_object() && !proto.is_null()) {
                throw RuntimeError(ErrorCode::Type, "object prototype may only be an object or null");
            }
            Object* obj = create_object(self->store(), proto);
            const Value& props = arg(args, 1);
            if (!props.is_undefined()) {
                Object& source = require_object(props, "Object.create properties");
                std::vector<std::pair<std::string, DescriptorFields>> fields;
                for (const std::string& key : source.properties().keys()) {
                    if (!source.properties().find(key)->enumerable) continue;
                    fields.emplace_back(key, to_descriptor_fields(invoker, get_property(invoker, source, key)));
                }
                for (const auto& [key, desc] : fields) define_property(*obj, key, desc);
            }
            return obj;
        }));
    install(oc, "defineProperty", new_native("Object.defineProperty",
        [](Invoker& invoker, const Value&, std::span<const Value> args) -> Value {
            Object& obj = require_object(arg(args, 0), "Object.defineProperty");
            const std::string key = to_property_key(invoker, arg(args, 1));
            define_property(obj, key, to_descriptor_fields(invoker, arg(args, 2)));
            return &obj;
        }));
    install(oc, "preventExtensions", new_native("Object.preventExtensions",
        [](Invoker&, const Value&, std::span<const Value> args) -> Value {
            prevent_extensions(require_object(arg(args, 0), "Object.preventExtensions"));
            return arg(args, 0);
        }));
    install(oc, "isExtensible", new_native("Object.isExtensible",
        [](Invoker&, const Value&, std::span<const Value> args) -> Value {
            return is_extensible(require_object(arg(args, 0), "Object.isExtensible"));
        }));
    install(oc, "freeze", new_native("Object.freeze",
        [](Invoker&, const Value&, std::span<const Value> args) -> Value {
            freeze(require_object(arg(args, 0), "Object.freeze"));
            return arg(args, 0);
        }));
    install(oc, "isFrozen", new_native("Object.isFrozen",
        [](Invoker&, const Value&, std::span<const Value> args) -> Value {
            return is_frozen(require_object(arg(args, 0), "Object.isFrozen"));
        }));

    // Array
    NativeCall make_array = [self](Invoker&, const Value&, std::span<const Value> args) -> Value {
        if (args.size() == 1 && args[0].is_number()) {
            const double n = args[0].as_number();
            if (!(n >= 0) || n != std::trunc(n) || n > 4294967295.0) {
                throw RuntimeError(ErrorCode::ArrayLength, "invalid array length");
            }
            Object* array = self->new_array();
            array->properties().find("length")->as_data().value = n;
            return array;
        }
        return self->new_array(args);
    };
    in.array_constructor = new_native("Array", make_array, make_array);
    install_fixed(*in.array_constructor, "prototype", in.array_prototype);
    install(ap, "constructor", in.array_constructor);

    // Function
    NativeCall make_function = [self](Invoker& invoker, const Value&, std::span<const Value> args) -> Value {
        std::string params;
        for (std::size_t i = 0; i + 1 < args.size(); ++i) {
            if (i > 0) params += ",";
            params += to_string(invoker, args[i]);
        }
        const std::string body = args.empty() ? "" : to_string(invoker, args.back());
        const std::string source = "(function anonymous(" + params + ") {\n" + body + "\n})";
        std::shared_ptr<const syntax::Node> program;
        try {
            program = syntax::parse_program(source);
        } catch (const syntax::SyntaxError& e) {
            throw RuntimeError(ErrorCode::Syntax, std::string("in Function body: ") + e.what());
        }
        const syntax::Node* stmt = program->child(0);
        const syntax::Node* fn = stmt ? stmt->child(0) : nullptr;
        if (program->children.size() != 1 || !fn || fn->kind != syntax::NodeKind::FunctionExpr) {
            throw RuntimeError(ErrorCode::Syntax, "malformed Function body");
        }
        self->retain(program);
        return self->new_function(ScriptFunction{fn, program, self->global_scope()});
    };
    in.function_constructor = new_native("Function", make_function, make_function);
    install_fixed(*in.function_constructor, "prototype", in.function_prototype);
    install(fp, "constructor", in.function_constructor);

    // eval is executed by the interpreter in the caller's scope.
    in.eval = new_native(kEvalBuiltinId, [](Invoker&, const Value&, std::span<const Value>) -> Value {
        throw RuntimeError(ErrorCode::Type, "eval requires an interpreter");
    });

    Object& w = *window_;
    install(w, "window", window_);
    install(w, "Object", in.object_constructor);
    install(w, "Array", in.array_constructor);
    install(w, "Function", in.function_constructor);
    install(w, "eval", in.eval);
}

}  // namespace jssec::runtime
