#include "jssec/lint/monitor.hpp"

#include <set>
#include <tuple>

namespace jssec::lint {

using runtime::RuntimeEvent;

std::vector<Diagnostic> monitor_global_leaks(const std::vector<RuntimeEvent>& events, const std::string& file,
                                             const RuleConfig& config) {
    std::vector<Diagnostic> out;
    std::set<std::tuple<std::string, syntax::SourceSpan, std::string>> seen;
    for (const RuntimeEvent& event : events) {
        Diagnostic d;
        d.file = file;
        d.span = event.span;
        switch (event.kind) {
            case RuntimeEvent::Kind::GlobalCreated:
                d.rule = "R001";
                d.message = "global variable '" + event.name + "' was created at run time";
                break;
            case RuntimeEvent::Kind::ThisBoundToWindow:
                if (!event.in_function) continue;
                d.rule = "R002";
                d.message = "'this' was bound to window inside a function";
                break;
            case RuntimeEvent::Kind::EvalInvoked:
                d.rule = "R003";
                d.message = "eval was invoked";
                break;
        }
        if (!config.is_enabled(d.rule)) continue;
        if (!seen.emplace(d.rule, d.span, event.name).second) continue;
        out.push_back(std::move(d));
    }
    sort_diagnostics(out);
    return out;
}

}  // namespace jssec::lint
