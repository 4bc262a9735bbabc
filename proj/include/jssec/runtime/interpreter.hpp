#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jssec/runtime/errors.hpp"
#include "jssec/runtime/object.hpp"
#include "jssec/runtime/realm.hpp"
#include "jssec/runtime/scope.hpp"
#include "jssec/syntax/ast.hpp"

namespace jssec::runtime {

struct ErrorInfo {
    ErrorCode code;
    std::string message;
    std::optional<syntax::SourceSpan> span;

    // "TypeError: message"
    std::string describe() const;
};

struct Completion {
    enum class Kind { Normal, Return, Error };
    Kind kind = Kind::Normal;
    Value value;
    std::optional<ErrorInfo> error;

    bool is_error() const { return kind == Kind::Error; }
    static Completion normal(Value v) { return {Kind::Normal, std::move(v), std::nullopt}; }
    static Completion failure(ErrorInfo info) { return {Kind::Error, Value(), std::move(info)}; }
};

struct RuntimeEvent {
    enum class Kind { GlobalCreated, ThisBoundToWindow, EvalInvoked };
    Kind kind;
    std::string name;  // global-created only
    syntax::SourceSpan span;
    bool in_function = false;  // this-bound-to-window: `this` evaluated inside a function body
};

std::string_view to_string(RuntimeEvent::Kind kind);

// Value of one top-level expression statement.
struct StatementRecord {
    const syntax::Node* statement = nullptr;
    Value value;
};

struct ProgramResult {
    Completion completion;
    std::vector<RuntimeEvent> events;
    std::vector<StatementRecord> trace;
    // Innermost top-level statement executing when an error completion occurred.
    const syntax::Node* failed_statement = nullptr;
};

struct EvalHooks {
    std::function<void(const RuntimeEvent&)> on_event;
    std::function<void(const StatementRecord&)> on_statement;
};

struct CallShape {
    enum class Kind { MemberCall, PlainCall, ExplicitCall, Construct };
    Kind kind = Kind::PlainCall;
    Value base;           // member-call
    Value explicit_this;  // call/apply
    Value fresh;          // construct
};

Value resolve_this(const CallShape& shape, const Realm& realm);

class Interpreter final : public Invoker {
public:
    static constexpr int kMaxCallDepth = 400;

    explicit Interpreter(Realm& realm, EvalHooks hooks = {});

    Realm& realm() { return realm_; }

    // Runs a program in the realm's global scope. Programs are retained by
    // the realm since functions they define may outlive this call.
    ProgramResult eval_program(std::shared_ptr<const syntax::Node> program);
    ProgramResult eval_source(std::string_view source);

    Completion invoke_function(const Value& fn, const Value& this_value, std::span<const Value> args);
    // `new fn(args)`; errors surface as RuntimeError.
    Value construct(const Value& fn, std::span<const Value> args);
    // A plain call: this is window.
    Completion call_without_new(const Value& fn, std::span<const Value> args);
    // Object frame over `obj` in front of `scope`; throws for non-objects.
    Scope* enter_with(const Value& obj, Scope* scope);
    // Evaluates `text` in `scope`. Non-string arguments are returned as is.
    Value direct_eval(const Value& text, Scope* scope);

    Value call(const Value& callee, const Value& this_value, std::span<const Value> args) override;

private:
    struct Flow {
        bool returned = false;
        Value value;
    };
    struct Reference;

    Flow exec(const syntax::Node& node, Scope* scope);
    Flow exec_list(const std::vector<syntax::NodePtr>& statements, Scope* scope);
    void exec_for_in(const syntax::Node& node, Scope* scope);
    Value eval(const syntax::Node& node, Scope* scope);

    Reference resolve_identifier(const std::string& name, Scope* scope);
    Reference evaluate_reference(const syntax::Node& target, Scope* scope);
    Value get_value(const Reference& ref);
    void put_value(const Reference& ref, const Value& value, const syntax::Node& site);

    Value get_member(const Value& base, const std::string& key, const syntax::Node& site);
    void put_member(const Value& base, const std::string& key, const Value& value, const syntax::Node& site);

    Value eval_call(const syntax::Node& node, Scope* scope);
    Value eval_binary(const syntax::Node& node, Scope* scope);
    Value eval_unary(const syntax::Node& node, Scope* scope);
    Value eval_delete(const syntax::Node& node, Scope* scope);
    Value eval_this(const syntax::Node& node, Scope* scope);
    Value make_closure(const syntax::Node& fn, Scope* scope);

    Value call_function(const Value& fn, const Value& this_value, std::span<const Value> args);
    Value invoke_script(Object& fn, const ScriptFunction& script, const Value& this_value,
                        std::span<const Value> args);
    void instantiate_declarations(const syntax::Node& body, Scope* variable_scope, bool from_eval);
    Scope* variable_scope_of(Scope* scope) const;

    void emit(RuntimeEvent event);
    bool at_top_level() const { return function_depth_ == 0 && eval_depth_ == 0; }
    std::string describe_callee(const syntax::Node& callee) const;

    Realm& realm_;
    EvalHooks hooks_;
    std::vector<RuntimeEvent> events_;
    std::vector<StatementRecord> trace_;
    const syntax::Node* current_statement_ = nullptr;
    const syntax::Node* current_call_site_ = nullptr;
    std::shared_ptr<const syntax::Node> current_program_;
    Scope* current_scope_ = nullptr;
    Value* eval_completion_ = nullptr;
    int eval_completion_depth_ = 0;
    int function_depth_ = 0;
    int eval_depth_ = 0;
    int call_depth_ = 0;
};

}  // namespace jssec::runtime
