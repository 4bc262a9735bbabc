#include "jssec/lint/rules.hpp"

#include <algorithm>

namespace jssec::lint {

const std::vector<RuleInfo>& all_rules() {
    static const std::vector<RuleInfo> rules = {
        {"W001", "implicit-global",
         "assignment to an undeclared name, or to a property of `this` in a function called without a receiver, "
         "creates a property of the global object",
         "ECMA-262 5.1 §8.7.2 PutValue"},
        {"W002", "with-statement",
         "`with` puts an object's properties in front of the enclosing scope, so which variable a name refers to "
         "depends on the object at run time",
         "ECMA-262 5.1 §12.10 The with Statement"},
        {"W003", "constructor-without-new",
         "a capitalized function is called without `new`; its `this` is the global object",
         "ECMA-262 5.1 §13.2.2 [[Construct]]"},
        {"W004", "this-in-plain-function",
         "`this` inside a function that is called without a receiver, or at top level, is the global object",
         "ECMA-262 5.1 §10.4.3 Entering Function Code"},
        {"W005", "loose-equality",
         "`==` and `!=` convert their operands before comparing",
         "ECMA-262 5.1 §11.9.3 The Abstract Equality Comparison Algorithm"},
        {"W006", "eval",
         "eval runs code built from a string in the caller's scope",
         "ECMA-262 5.1 §15.1.2.1 eval (x)"},
        {"W007", "var-self-initialization",
         "`var x = x` reads the hoisted local, which is still undefined, instead of the outer `x`",
         "ECMA-262 5.1 §10.5 Declaration Binding Instantiation"},
        {"W008", "proto-access",
         "`__proto__` is a non-standard accessor for the internal prototype link",
         "ECMA-262 5.1 §8.6.2 Object Internal Properties"},
        {"W009", "constructor-returns-object",
         "a capitalized function returns an object, which replaces the object `new` created",
         "ECMA-262 5.1 §13.2.2 [[Construct]]"},
        {"R001", "runtime-global-created",
         "a property was added to the global object by an assignment at run time",
         "ECMA-262 5.1 §8.7.2 PutValue"},
        {"R002", "runtime-this-is-window",
         "`this` evaluated to the global object inside a function body at run time",
         "ECMA-262 5.1 §10.4.3 Entering Function Code"},
        {"R003", "runtime-eval",
         "eval was invoked at run time",
         "ECMA-262 5.1 §15.1.2.1 eval (x)"},
    };
    return rules;
}

const RuleInfo& rule_info(std::string_view id) {
    const auto& rules = all_rules();
    const auto it = std::find_if(rules.begin(), rules.end(), [&](const RuleInfo& r) { return r.id == id; });
    if (it == rules.end()) throw UnknownRuleError(std::string(id));
    return *it;
}

std::string explain_rule(std::string_view id) {
    const RuleInfo& rule = rule_info(id);
    return std::string(rule.id) + " " + std::string(rule.name) + ": " + std::string(rule.description) + " [" +
           std::string(rule.reference) + "]";
}

RuleConfig RuleConfig::all() {
    RuleConfig config;
    for (const auto& rule : all_rules()) config.enabled.emplace(rule.id);
    return config;
}

RuleConfig RuleConfig::parse(std::string_view ids) {
    RuleConfig config;
    while (!ids.empty()) {
        const auto comma = ids.find(',');
        std::string_view id = ids.substr(0, comma);
        while (!id.empty() && id.front() == ' ') id.remove_prefix(1);
        while (!id.empty() && id.back() == ' ') id.remove_suffix(1);
        if (!id.empty()) config.enabled.emplace(rule_info(id).id);
        if (comma == std::string_view::npos) break;
        ids.remove_prefix(comma + 1);
    }
    return config;
}

}  // namespace jssec::lint
