#include "jssec/runtime/interpreter.hpp"

#include <cmath>
#include <utility>

#include "jssec/runtime/coercion.hpp"
#include "jssec/runtime/hoisting.hpp"
#include "jssec/runtime/object_model.hpp"
#include "jssec/syntax/parser.hpp"
#include "jssec/syntax/token.hpp"

namespace jssec::runtime {

using syntax::Node;
using syntax::NodeKind;

namespace {

// Restores a variable on scope exit, normal or exceptional.
template <typename T>
class Restore {
public:
    explicit Restore(T& ref) : ref_(ref), saved_(ref) {}
    Restore(T& ref, T value) : ref_(ref), saved_(ref) { ref_ = std::move(value); }
    ~Restore() { ref_ = std::move(saved_); }
    Restore(const Restore&) = delete;
    Restore& operator=(const Restore&) = delete;

private:
    T& ref_;
    T saved_;
};

Value literal_value(const syntax::LiteralValue& literal) {
    return std::visit(
        [](const auto& v) -> Value {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, syntax::UndefinedLiteral>) {
                return Value();
            } else if constexpr (std::is_same_v<T, syntax::NullLiteral>) {
                return Null{};
            } else {
                return Value(v);
            }
        },
        literal);
}

// UTF-8 text decoded to UTF-16 code units, which is what string indexing
// and `length` count.
std::u16string to_utf16(const std::string& s) {
    std::u16string out;
    for (std::size_t i = 0; i < s.size();) {
        const auto c = static_cast<unsigned char>(s[i]);
        char32_t cp = c;
        std::size_t extra = 0;
        if (c >= 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else if (c >= 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if (c >= 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        }
        ++i;
        for (std::size_t k = 0; k < extra && i < s.size(); ++k, ++i) {
            cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
        }
        if (cp > 0xFFFF) {
            cp -= 0x10000;
            out.push_back(static_cast<char16_t>(0xD800 + (cp >> 10)));
            out.push_back(static_cast<char16_t>(0xDC00 + (cp & 0x3FF)));
        } else {
            out.push_back(static_cast<char16_t>(cp));
        }
    }
    return out;
}

std::string unit_to_utf8(char16_t unit) {
    std::string out;
    const char32_t cp = unit;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

bool inside_function_body(const Scope* scope) {
    for (const Scope* s = scope; s; s = s->outer()) {
        if (s->kind() == Scope::Kind::Declarative && s->is_variable_scope()) return true;
    }
    return false;
}

}  // namespace

std::string ErrorInfo::describe() const {
    return std::string(error_name(code)) + ": " + message;
}

std::string_view to_string(RuntimeEvent::Kind kind) {
    switch (kind) {
        case RuntimeEvent::Kind::GlobalCreated: return "global-created";
        case RuntimeEvent::Kind::ThisBoundToWindow: return "this-bound-to-window";
        case RuntimeEvent::Kind::EvalInvoked: return "eval-invoked";
    }
    return "?";
}

Value resolve_this(const CallShape& shape, const Realm& realm) {
    switch (shape.kind) {
        case CallShape::Kind::MemberCall: return shape.base;
        case CallShape::Kind::PlainCall: return &realm.window();
        case CallShape::Kind::ExplicitCall: return shape.explicit_this;
        case CallShape::Kind::Construct: return shape.fresh;
    }
    return &realm.window();
}

struct Interpreter::Reference {
    enum class Kind { Binding, ObjectBinding, Property, Unresolvable };
    Kind kind = Kind::Unresolvable;
    Scope* scope = nullptr;
    std::size_t index = 0;
    Object* object = nullptr;
    Value base;
    std::string name;
};

Interpreter::Interpreter(Realm& realm, EvalHooks hooks)
    : realm_(realm), hooks_(std::move(hooks)), current_scope_(realm.global_scope()) {}

// ---------------------------------------------------------------------------
// Entry points

ProgramResult Interpreter::eval_program(std::shared_ptr<const Node> program) {
    realm_.retain(program);
    events_.clear();
    trace_.clear();
    current_statement_ = nullptr;
    function_depth_ = eval_depth_ = call_depth_ = 0;

    Scope* global = realm_.global_scope();
    Restore program_guard(current_program_, program);
    Restore scope_guard(current_scope_, global);

    ProgramResult result;
    try {
        instantiate_declarations(*program, global, false);
        exec_list(program->children, global);
        result.completion = Completion::normal(trace_.empty() ? Value() : trace_.back().value);
    } catch (const RuntimeError& e) {
        result.completion = Completion::failure(ErrorInfo{e.code(), e.what(), e.span()});
        result.failed_statement = current_statement_;
    }
    result.events = std::move(events_);
    result.trace = std::move(trace_);
    events_.clear();
    trace_.clear();
    return result;
}

ProgramResult Interpreter::eval_source(std::string_view source) {
    std::shared_ptr<const Node> program;
    try {
        program = syntax::parse_program(source);
    } catch (const syntax::SyntaxError& e) {
        ProgramResult result;
        result.completion = Completion::failure(ErrorInfo{ErrorCode::Syntax, e.what(), e.span()});
        return result;
    }
    return eval_program(std::move(program));
}

Completion Interpreter::invoke_function(const Value& fn, const Value& this_value, std::span<const Value> args) {
    if (!fn.is_callable()) {
        return Completion::failure(ErrorInfo{ErrorCode::NotCallable, "value is not a function", std::nullopt});
    }
    try {
        return Completion::normal(call_function(fn, this_value, args));
    } catch (const RuntimeError& e) {
        return Completion::failure(ErrorInfo{e.code(), e.what(), e.span()});
    }
}

Completion Interpreter::call_without_new(const Value& fn, std::span<const Value> args) {
    return invoke_function(fn, resolve_this(CallShape{}, realm_), args);
}

Value Interpreter::call(const Value& callee, const Value& this_value, std::span<const Value> args) {
    if (!callee.is_callable()) throw RuntimeError(ErrorCode::NotCallable, "value is not a function");
    return call_function(callee, this_value, args);
}

Scope* Interpreter::enter_with(const Value& obj, Scope* scope) {
    if (!obj.is_object()) {
        throw RuntimeError(ErrorCode::WithOperand,
                           "with statement requires an object, got " + typeof_name(obj));
    }
    return realm_.new_object_scope(obj.as_object(), scope, scope->this_value());
}

Value Interpreter::direct_eval(const Value& text, Scope* scope) {
    if (!text.is_string()) return text;
    std::shared_ptr<const Node> program;
    try {
        program = syntax::parse_program(text.as_string());
    } catch (const syntax::SyntaxError& e) {
        throw RuntimeError(ErrorCode::Syntax, std::string("in eval: ") + e.what());
    }
    realm_.retain(program);

    Value completion;
    Restore program_guard(current_program_, program);
    Restore depth_guard(eval_depth_, eval_depth_ + 1);
    Restore sink_guard(eval_completion_, &completion);
    Restore sink_depth_guard(eval_completion_depth_, function_depth_ + eval_depth_);
    Restore scope_guard(current_scope_, scope);

    instantiate_declarations(*program, variable_scope_of(scope), true);
    exec_list(program->children, scope);
    return completion;
}

// ---------------------------------------------------------------------------
// Functions

Value Interpreter::call_function(const Value& fn, const Value& this_value, std::span<const Value> args) {
    if (call_depth_ >= kMaxCallDepth) {
        throw RuntimeError(ErrorCode::StackOverflow, "maximum call depth exceeded");
    }
    Restore depth_guard(call_depth_, call_depth_ + 1);
    Object& f = *fn.as_object();
    const FunctionPayload& payload = *f.function();
    if (const auto* native = std::get_if<NativeFunction>(&payload)) {
        if (native->builtin_id == kEvalBuiltinId) {
            RuntimeEvent event{RuntimeEvent::Kind::EvalInvoked, "", {}, false};
            if (current_call_site_) event.span = current_call_site_->span;
            emit(std::move(event));
            return direct_eval(args.empty() ? Value() : args[0], current_scope_);
        }
        return native->call(*this, this_value, args);
    }
    return invoke_script(f, std::get<ScriptFunction>(payload), this_value, args);
}

Value Interpreter::invoke_script(Object&, const ScriptFunction& script, const Value& this_value,
                                 std::span<const Value> args) {
    const Node& fn = *script.node;
    Scope* scope = realm_.new_declarative_scope(script.closure, this_value, true);
    for (std::size_t i = 0; i < fn.names.size(); ++i) {
        scope->bind(fn.names[i], i < args.size() ? args[i] : Value());
    }
    Restore program_guard(current_program_, script.program);
    Restore depth_guard(function_depth_, function_depth_ + 1);
    Restore scope_guard(current_scope_, scope);
    instantiate_declarations(fn.body(), scope, false);
    Flow flow = exec_list(fn.body().children, scope);
    return flow.returned ? flow.value : Value();
}

Value Interpreter::construct(const Value& fn, std::span<const Value> args) {
    if (!fn.is_callable()) throw RuntimeError(ErrorCode::NotConstructor, "value is not a constructor");
    Object& f = *fn.as_object();
    const FunctionPayload& payload = *f.function();
    if (const auto* native = std::get_if<NativeFunction>(&payload)) {
        if (!native->construct) {
            throw RuntimeError(ErrorCode::NotConstructor, native->builtin_id + " is not a constructor");
        }
        if (call_depth_ >= kMaxCallDepth) {
            throw RuntimeError(ErrorCode::StackOverflow, "maximum call depth exceeded");
        }
        Restore depth_guard(call_depth_, call_depth_ + 1);
        return native->construct(*this, Value(), args);
    }
    const Value proto = get_property(*this, f, "prototype");
    Object* fresh = realm_.store().allocate(
        ObjectClass::Ordinary, proto.is_object() ? proto.as_object() : realm_.intrinsics().object_prototype);
    CallShape shape;
    shape.kind = CallShape::Kind::Construct;
    shape.fresh = fresh;
    if (call_depth_ >= kMaxCallDepth) {
        throw RuntimeError(ErrorCode::StackOverflow, "maximum call depth exceeded");
    }
    Restore depth_guard(call_depth_, call_depth_ + 1);
    Value result = invoke_script(f, std::get<ScriptFunction>(payload), resolve_this(shape, realm_), args);
    return result.is_object() ? result : Value(fresh);
}

Value Interpreter::make_closure(const Node& fn, Scope* scope) {
    Scope* closure = scope;
    const bool named_expression = fn.kind == NodeKind::FunctionExpr && !fn.name.empty();
    if (named_expression) closure = realm_.new_declarative_scope(scope, scope->this_value(), false);
    Object* function = realm_.new_function(ScriptFunction{&fn, current_program_, closure});
    if (named_expression) closure->bind(fn.name, function);
    return function;
}

Scope* Interpreter::variable_scope_of(Scope* scope) const {
    for (Scope* s = scope; s; s = s->outer()) {
        if (s->is_variable_scope()) return s;
    }
    return realm_.global_scope();
}

void Interpreter::instantiate_declarations(const Node& body, Scope* scope, bool from_eval) {
    const HoistedDeclarations hoisted = hoist_declarations(body);
    if (scope->kind() == Scope::Kind::Declarative) {
        for (const auto& name : hoisted.var_names) {
            if (scope->find(name) < 0) scope->bind(name, Value());
        }
        for (const Node* fn : hoisted.functions) scope->bind(fn->name, make_closure(*fn, scope));
        return;
    }
    // Global declarations become window properties; those made by eval stay
    // deletable.
    Object& global = *scope->object();
    for (const Node* fn : hoisted.functions) {
        const Value closure = make_closure(*fn, scope);
        const PropertyDescriptor* existing = get_own_property(global, fn->name);
        if (!existing || existing->configurable) {
            define_property(global, fn->name, PropertyDescriptor::data(closure, true, true, from_eval));
        } else {
            set_property(*this, global, fn->name, closure);
        }
    }
    for (const auto& name : hoisted.var_names) {
        if (!get_own_property(global, name)) {
            define_property(global, name, PropertyDescriptor::data(Value(), true, true, from_eval));
        }
    }
}

void Interpreter::emit(RuntimeEvent event) {
    if (hooks_.on_event) hooks_.on_event(event);
    events_.push_back(std::move(event));
}

std::string Interpreter::describe_callee(const Node& callee) const {
    switch (callee.kind) {
        case NodeKind::Identifier: return callee.name;
        case NodeKind::Member: return describe_callee(*callee.child(0)) + "." + callee.name;
        case NodeKind::Index: return describe_callee(*callee.child(0)) + "[...]";
        case NodeKind::This: return "this";
        default: return "expression";
    }
}

// ---------------------------------------------------------------------------
// References

Interpreter::Reference Interpreter::resolve_identifier(const std::string& name, Scope* scope) {
    Reference ref;
    ref.name = name;
    for (Scope* s = scope; s; s = s->outer()) {
        if (s->kind() == Scope::Kind::Declarative) {
            const long index = s->find(name);
            if (index >= 0) {
                ref.kind = Reference::Kind::Binding;
                ref.scope = s;
                ref.index = static_cast<std::size_t>(index);
                return ref;
            }
        } else if (has_property(*s->object(), name)) {
            ref.kind = Reference::Kind::ObjectBinding;
            ref.object = s->object();
            return ref;
        }
    }
    ref.kind = Reference::Kind::Unresolvable;
    return ref;
}

Interpreter::Reference Interpreter::evaluate_reference(const Node& target, Scope* scope) {
    switch (target.kind) {
        case NodeKind::Identifier: return resolve_identifier(target.name, scope);
        case NodeKind::Member: {
            Reference ref;
            ref.kind = Reference::Kind::Property;
            ref.base = eval(*target.child(0), scope);
            ref.name = target.name;
            return ref;
        }
        case NodeKind::Index: {
            Reference ref;
            ref.kind = Reference::Kind::Property;
            ref.base = eval(*target.child(0), scope);
            const Value key = eval(*target.child(1), scope);
            ref.name = to_property_key(*this, key);
            return ref;
        }
        default:
            throw RuntimeError(ErrorCode::Type, "invalid assignment target", target.span);
    }
}

Value Interpreter::get_value(const Reference& ref) {
    switch (ref.kind) {
        case Reference::Kind::Binding: return ref.scope->bindings()[ref.index].second;
        case Reference::Kind::ObjectBinding: return get_property(*this, *ref.object, ref.name);
        case Reference::Kind::Property: break;
        case Reference::Kind::Unresolvable:
            throw RuntimeError(ErrorCode::UnresolvedReference, ref.name + " is not defined");
    }
    if (ref.base.is_nullish()) {
        throw RuntimeError(ErrorCode::PropertyOfNullish,
                           "cannot read property '" + ref.name + "' of " + primitive_to_string(ref.base));
    }
    if (ref.base.is_object()) return get_property(*this, *ref.base.as_object(), ref.name);
    return Value();
}

void Interpreter::put_value(const Reference& ref, const Value& value, const Node& site) {
    switch (ref.kind) {
        case Reference::Kind::Binding:
            ref.scope->bindings()[ref.index].second = value;
            return;
        case Reference::Kind::ObjectBinding:
            put_member(ref.object, ref.name, value, site);
            return;
        case Reference::Kind::Property:
            put_member(ref.base, ref.name, value, site);
            return;
        case Reference::Kind::Unresolvable:
            put_member(&realm_.window(), ref.name, value, site);
            return;
    }
}

Value Interpreter::get_member(const Value& base, const std::string& key, const Node&) {
    if (base.is_nullish()) {
        throw RuntimeError(ErrorCode::PropertyOfNullish,
                           "cannot read property '" + key + "' of " + primitive_to_string(base));
    }
    if (base.is_object()) return get_property(*this, *base.as_object(), key);
    if (base.is_string()) {
        const std::u16string units = to_utf16(base.as_string());
        if (key == "length") return static_cast<double>(units.size());
        std::uint32_t index = 0;
        if (is_array_index(key, &index) && index < units.size()) return unit_to_utf8(units[index]);
    }
    return Value();
}

void Interpreter::put_member(const Value& base, const std::string& key, const Value& value, const Node& site) {
    if (base.is_nullish()) {
        throw RuntimeError(ErrorCode::PropertyOfNullish,
                           "cannot set property '" + key + "' of " + primitive_to_string(base));
    }
    if (!base.is_object()) return;
    Object& obj = *base.as_object();
    const bool existed = get_own_property(obj, key) != nullptr;
    set_property(*this, obj, key, value);
    if (obj.is_global() && !existed && get_own_property(obj, key)) {
        emit(RuntimeEvent{RuntimeEvent::Kind::GlobalCreated, key, site.span, false});
    }
}

// ---------------------------------------------------------------------------
// Statements

Interpreter::Flow Interpreter::exec_list(const std::vector<syntax::NodePtr>& statements, Scope* scope) {
    for (const auto& statement : statements) {
        Flow flow = exec(*statement, scope);
        if (flow.returned) return flow;
    }
    return {};
}

Interpreter::Flow Interpreter::exec(const Node& node, Scope* scope) {
    const bool top = at_top_level();
    const Node* enclosing = current_statement_;
    if (top) current_statement_ = &node;
    Flow flow;
    try {
        switch (node.kind) {
            case NodeKind::ExpressionStatement: {
                Value value = eval(*node.child(0), scope);
                if (eval_completion_ && eval_completion_depth_ == function_depth_ + eval_depth_) {
                    *eval_completion_ = value;
                }
                if (top && node.traced) {
                    trace_.push_back(StatementRecord{&node, value});
                    if (hooks_.on_statement) hooks_.on_statement(trace_.back());
                }
                break;
            }
            case NodeKind::VarDecl:
                for (std::size_t i = 0; i < node.names.size(); ++i) {
                    const Node* init = node.child(i);
                    if (!init) continue;
                    const Reference ref = resolve_identifier(node.names[i], scope);
                    const Value value = eval(*init, scope);
                    put_value(ref, value, node);
                }
                break;
            case NodeKind::FunctionDecl:
            case NodeKind::Empty:
                break;
            case NodeKind::Return:
                flow.returned = true;
                if (node.child(0)) flow.value = eval(*node.child(0), scope);
                break;
            case NodeKind::If:
                if (to_boolean(eval(*node.child(0), scope))) {
                    flow = exec(*node.child(1), scope);
                } else if (node.child(2)) {
                    flow = exec(*node.child(2), scope);
                }
                break;
            case NodeKind::For: {
                if (const Node* init = node.child(0)) {
                    if (init->kind == NodeKind::VarDecl) {
                        exec(*init, scope);
                    } else {
                        eval(*init, scope);
                    }
                }
                while (!node.child(1) || to_boolean(eval(*node.child(1), scope))) {
                    flow = exec(*node.child(3), scope);
                    if (flow.returned) break;
                    if (node.child(2)) eval(*node.child(2), scope);
                }
                break;
            }
            case NodeKind::While:
                while (to_boolean(eval(*node.child(0), scope))) {
                    flow = exec(*node.child(1), scope);
                    if (flow.returned) break;
                }
                break;
            case NodeKind::ForIn: {
                const Node& target = *node.child(0);
                const Value subject = eval(*node.child(1), scope);
                if (!subject.is_object()) break;
                Object& obj = *subject.as_object();
                for (const std::string& key : enumerate_keys(obj)) {
                    if (!has_property(obj, key)) continue;  // deleted during iteration
                    const Reference ref = target.kind == NodeKind::VarDecl
                                              ? resolve_identifier(target.names.at(0), scope)
                                              : evaluate_reference(target, scope);
                    put_value(ref, key, target);
                    flow = exec(*node.child(2), scope);
                    if (flow.returned) break;
                }
                break;
            }
            case NodeKind::With: {
                Scope* inner = enter_with(eval(*node.child(0), scope), scope);
                Restore scope_guard(current_scope_, inner);
                flow = exec(*node.child(1), inner);
                break;
            }
            case NodeKind::Block:
            case NodeKind::Program:
                flow = exec_list(node.children, scope);
                break;
            default:
                // Bare expressions never reach here from the parser; evaluate
                // them anyway so synthesized trees stay executable.
                eval(node, scope);
                break;
        }
    } catch (RuntimeError& e) {
        e.set_span_if_missing(node.span);
        throw;
    }
    if (top) current_statement_ = enclosing;
    return flow;
}

// ---------------------------------------------------------------------------
// Expressions

Value Interpreter::eval(const Node& node, Scope* scope) {
    try {
        switch (node.kind) {
            case NodeKind::Literal: return literal_value(node.literal);
            case NodeKind::Identifier: return get_value(resolve_identifier(node.name, scope));
            case NodeKind::This: return eval_this(node, scope);
            case NodeKind::FunctionExpr:
            case NodeKind::FunctionDecl: return make_closure(node, scope);
            case NodeKind::ObjectLiteral: {
                Object* obj = realm_.new_object();
                for (std::size_t i = 0; i < node.names.size(); ++i) {
                    obj->properties().put(node.names[i], PropertyDescriptor::plain(eval(*node.child(i), scope)));
                }
                return obj;
            }
            case NodeKind::ArrayLiteral: {
                std::vector<Value> elements;
                elements.reserve(node.children.size());
                for (const auto& child : node.children) elements.push_back(eval(*child, scope));
                return realm_.new_array(elements);
            }
            case NodeKind::Member: return get_member(eval(*node.child(0), scope), node.name, node);
            case NodeKind::Index: {
                const Value base = eval(*node.child(0), scope);
                const Value key = eval(*node.child(1), scope);
                if (base.is_nullish()) {
                    throw RuntimeError(ErrorCode::PropertyOfNullish,
                                       "cannot read property of " + primitive_to_string(base));
                }
                return get_member(base, to_property_key(*this, key), node);
            }
            case NodeKind::Assign: {
                const Reference ref = evaluate_reference(*node.child(0), scope);
                Value value = eval(*node.child(1), scope);
                put_value(ref, value, node);
                return value;
            }
            case NodeKind::Binary: return eval_binary(node, scope);
            case NodeKind::Unary: return eval_unary(node, scope);
            case NodeKind::Delete: return eval_delete(node, scope);
            case NodeKind::Call: return eval_call(node, scope);
            case NodeKind::New: {
                const Value callee = eval(*node.child(0), scope);
                std::vector<Value> args;
                for (std::size_t i = 1; i < node.children.size(); ++i) args.push_back(eval(*node.child(i), scope));
                if (!callee.is_callable()) {
                    throw RuntimeError(ErrorCode::NotConstructor,
                                       describe_callee(*node.child(0)) + " is not a constructor");
                }
                Restore site_guard(current_call_site_, &node);
                Restore scope_guard(current_scope_, scope);
                return construct(callee, args);
            }
            default:
                throw RuntimeError(ErrorCode::Type,
                                   "cannot evaluate " + std::string(syntax::to_string(node.kind)) + " as an expression");
        }
    } catch (RuntimeError& e) {
        e.set_span_if_missing(node.span);
        throw;
    }
}

Value Interpreter::eval_this(const Node& node, Scope* scope) {
    const Value& value = scope->this_value();
    if (value.is_object() && value.as_object() == &realm_.window()) {
        emit(RuntimeEvent{RuntimeEvent::Kind::ThisBoundToWindow, "", node.span, inside_function_body(scope)});
    }
    return value;
}

Value Interpreter::eval_call(const Node& node, Scope* scope) {
    const Node& callee = *node.child(0);
    Value fn;
    CallShape shape;
    switch (callee.kind) {
        case NodeKind::Member:
        case NodeKind::Index: {
            const Reference ref = evaluate_reference(callee, scope);
            fn = get_value(ref);
            shape.kind = CallShape::Kind::MemberCall;
            shape.base = ref.base;
            break;
        }
        case NodeKind::Identifier: {
            const Reference ref = resolve_identifier(callee.name, scope);
            fn = get_value(ref);
            if (ref.kind == Reference::Kind::ObjectBinding && !ref.object->is_global()) {
                shape.kind = CallShape::Kind::MemberCall;
                shape.base = ref.object;
            }
            break;
        }
        default:
            fn = eval(callee, scope);
            break;
    }
    std::vector<Value> args;
    args.reserve(node.children.size() - 1);
    for (std::size_t i = 1; i < node.children.size(); ++i) args.push_back(eval(*node.child(i), scope));
    if (!fn.is_callable()) {
        throw RuntimeError(ErrorCode::NotCallable, describe_callee(callee) + " is not a function");
    }
    Restore site_guard(current_call_site_, &node);
    Restore scope_guard(current_scope_, scope);
    return call_function(fn, resolve_this(shape, realm_), args);
}

Value Interpreter::eval_binary(const Node& node, Scope* scope) {
    const std::string& op = node.op;
    if (op == "&&" || op == "||") {
        Value left = eval(*node.child(0), scope);
        if (to_boolean(left) == (op == "||")) return left;
        return eval(*node.child(1), scope);
    }
    const Value left = eval(*node.child(0), scope);
    const Value right = eval(*node.child(1), scope);
    if (op == "+") return add_operator(*this, left, right);
    if (op == "-" || op == "*" || op == "/" || op == "%") {
        const double a = to_number(*this, left);
        const double b = to_number(*this, right);
        if (op == "-") return a - b;
        if (op == "*") return a * b;
        if (op == "/") return a / b;
        return std::fmod(a, b);
    }
    if (op == "==") return abstract_equals(*this, left, right);
    if (op == "!=") return !abstract_equals(*this, left, right);
    if (op == "===") return strict_equals(left, right);
    if (op == "!==") return !strict_equals(left, right);
    if (op == "<") return abstract_less_than(*this, left, right).value_or(false);
    if (op == ">") return abstract_less_than(*this, right, left, false).value_or(false);
    if (op == "<=") {
        const auto r = abstract_less_than(*this, right, left, false);
        return r.has_value() && !*r;
    }
    if (op == ">=") {
        const auto r = abstract_less_than(*this, left, right);
        return r.has_value() && !*r;
    }
    throw RuntimeError(ErrorCode::Type, "unsupported operator " + op);
}

Value Interpreter::eval_unary(const Node& node, Scope* scope) {
    const std::string& op = node.op;
    const Node& operand = *node.child(0);
    if (op == "typeof") {
        if (operand.kind == NodeKind::Identifier) {
            const Reference ref = resolve_identifier(operand.name, scope);
            if (ref.kind == Reference::Kind::Unresolvable) return "undefined";
            return typeof_name(get_value(ref));
        }
        return typeof_name(eval(operand, scope));
    }
    if (op == "++" || op == "--") {
        const Reference ref = evaluate_reference(operand, scope);
        const double old_value = to_number(*this, get_value(ref));
        const double new_value = op == "++" ? old_value + 1 : old_value - 1;
        put_value(ref, new_value, node);
        return node.prefix ? new_value : old_value;
    }
    const Value value = eval(operand, scope);
    if (op == "!") return !to_boolean(value);
    if (op == "-") return -to_number(*this, value);
    throw RuntimeError(ErrorCode::Type, "unsupported operator " + op);
}

Value Interpreter::eval_delete(const Node& node, Scope* scope) {
    const Node& operand = *node.child(0);
    switch (operand.kind) {
        case NodeKind::Member:
        case NodeKind::Index: {
            const Reference ref = evaluate_reference(operand, scope);
            if (ref.base.is_nullish()) {
                throw RuntimeError(ErrorCode::PropertyOfNullish,
                                   "cannot delete property '" + ref.name + "' of " + primitive_to_string(ref.base));
            }
            if (!ref.base.is_object()) return true;
            return delete_property(*ref.base.as_object(), ref.name);
        }
        case NodeKind::Identifier: {
            const Reference ref = resolve_identifier(operand.name, scope);
            switch (ref.kind) {
                case Reference::Kind::Binding: return false;
                case Reference::Kind::ObjectBinding: return delete_property(*ref.object, ref.name);
                default: return true;
            }
        }
        default:
            eval(operand, scope);
            return true;
    }
}

}  // namespace jssec::runtime
