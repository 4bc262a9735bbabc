#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jssec/lint/diagnostic.hpp"
#include "jssec/lint/rules.hpp"
#include "jssec/lint/scope_model.hpp"
#include "jssec/syntax/ast.hpp"

namespace jssec::lint {

// Static rules W001..W009 over a parsed program. Output is sorted.
std::vector<Diagnostic> lint_program(const syntax::Node& program, const ScopeModel& model,
                                     const RuleConfig& config = RuleConfig::all(), const std::string& file = "");

// Parses and lints; throws syntax::SyntaxError on unparsable input.
std::vector<Diagnostic> lint_source(std::string_view source, const std::string& file = "",
                                    const RuleConfig& config = RuleConfig::all());

}  // namespace jssec::lint
