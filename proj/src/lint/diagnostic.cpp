#include "jssec/lint/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace jssec::lint {

std::string_view to_string(Severity severity) {
    return severity == Severity::Warning ? "warning" : "error";
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
        const auto a_start = a.span.start();
        const auto b_start = b.span.start();
        return std::tie(a.file, a_start, a.rule, a.span, a.message) < std::tie(b.file, b_start, b.rule, b.span, b.message);
    });
}

}  // namespace jssec::lint
