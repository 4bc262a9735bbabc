#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jssec/syntax/source_span.hpp"

namespace jssec::lint {

enum class Severity { Warning, Error };

std::string_view to_string(Severity severity);

struct Diagnostic {
    std::string rule;  // W001..W009, R001..R003
    Severity severity = Severity::Warning;
    syntax::SourceSpan span;
    std::string message;
    std::string file;

    bool operator==(const Diagnostic&) const = default;
};

// Orders by (file, span start, rule id), then message for a total order.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

}  // namespace jssec::lint
