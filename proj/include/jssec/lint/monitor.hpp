#pragma once

#include <string>
#include <vector>

#include "jssec/lint/diagnostic.hpp"
#include "jssec/lint/rules.hpp"
#include "jssec/runtime/interpreter.hpp"

namespace jssec::lint {

// R001 per global created, R002 per `this` bound to window inside a function
// body, R003 per eval call. Repeats of the same event at the same place are
// reported once.
std::vector<Diagnostic> monitor_global_leaks(const std::vector<runtime::RuntimeEvent>& events,
                                             const std::string& file = "",
                                             const RuleConfig& config = RuleConfig::all());

}  // namespace jssec::lint
