#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jssec::lint {

struct RuleInfo {
    std::string_view id;
    std::string_view name;
    std::string_view description;
    std::string_view reference;  // ECMA-262 clause the hazard comes from
};

// Static rules W001..W009 followed by runtime rules R001..R003.
const std::vector<RuleInfo>& all_rules();

class UnknownRuleError : public std::invalid_argument {
public:
    explicit UnknownRuleError(const std::string& id) : std::invalid_argument("unknown rule '" + id + "'") {}
};

const RuleInfo& rule_info(std::string_view id);

// "W002 with-statement: <description> [<reference>]"
std::string explain_rule(std::string_view id);

struct RuleConfig {
    std::set<std::string, std::less<>> enabled;

    static RuleConfig all();
    // Comma-separated ids, e.g. "W001,W005"; throws UnknownRuleError.
    static RuleConfig parse(std::string_view ids);

    bool is_enabled(std::string_view id) const { return enabled.contains(id); }
};

}  // namespace jssec::lint
