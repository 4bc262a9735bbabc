#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "jssec/cli/display.hpp"
#include "jssec/runtime/interpreter.hpp"
#include "jssec/runtime/object_model.hpp"
#include "jssec/runtime/realm.hpp"

namespace jssec::testing {

// A fresh realm plus an interpreter bound to it.
struct Session {
    std::unique_ptr<runtime::Realm> realm = runtime::Realm::create();
    runtime::Interpreter interpreter{*realm};

    runtime::ProgramResult run(std::string_view source) { return interpreter.eval_source(source); }

    // Display of the last top-level expression statement, or "<ErrorName>" on failure.
    std::string value(std::string_view source) {
        const auto result = run(source);
        if (result.completion.is_error()) {
            return "<" + std::string(runtime::error_name(result.completion.error->code)) + ">";
        }
        return cli::display(result.completion.value);
    }

    runtime::Value global(const std::string& name) {
        return runtime::get_property(interpreter, realm->window(), name);
    }
};

}  // namespace jssec::testing
