#include "jssec/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "jssec/cli/display.hpp"
#include "jssec/lint/linter.hpp"
#include "jssec/lint/monitor.hpp"
#include "jssec/runtime/interpreter.hpp"
#include "jssec/syntax/expectation.hpp"
#include "jssec/syntax/parser.hpp"
#include "jssec/syntax/token.hpp"

namespace jssec::cli {

namespace fs = std::filesystem;
using syntax::ExpectationKind;

namespace {

std::string location(const std::string& file, const syntax::SourceSpan& span) {
    return file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

void report_syntax_error(std::ostream& err, const std::string& file, const syntax::SyntaxError& e) {
    err << location(file, e.span()) << ": error: SyntaxError: " << e.what() << "\n";
}

std::string describe_error(const runtime::ErrorInfo& info) {
    return "<error: " + info.describe() + ">";
}

}  // namespace

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<fs::path> corpus_files(const fs::path& dir, std::string_view filter) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".js") continue;
        if (entry.path().filename().string().find(filter) == std::string::npos) continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

CorpusResult check_corpus_source(std::string_view source, const std::string& file) {
    CorpusResult result;
    result.file = file;

    std::vector<syntax::Expectation> expectations;
    std::shared_ptr<const syntax::Node> program;
    try {
        expectations = syntax::extract_expectations(source);
        program = syntax::parse_program(source);
    } catch (const syntax::SyntaxError& e) {
        result.total = std::max<std::size_t>(1, expectations.size());
        const std::string actual = "<syntax error at " + syntax::to_string(e.span()) + ": " + e.what() + ">";
        if (expectations.empty()) {
            result.failed.push_back({e.span(), "<parse>", actual});
        }
        for (const auto& expectation : expectations) {
            result.failed.push_back({expectation.span, "<parse>", actual});
        }
        return result;
    }

    auto realm = runtime::Realm::create();
    runtime::Interpreter interpreter(*realm);
    const runtime::ProgramResult run = interpreter.eval_program(program);

    std::map<const syntax::Node*, runtime::Value> last_value;
    for (const auto& record : run.trace) last_value[record.statement] = record.value;
    const bool errored = run.completion.is_error();

    for (const auto& expectation : expectations) {
        ++result.total;
        const syntax::Node* statement = syntax::attach_expectation(*program, expectation);
        const std::string expected =
            expectation.kind == ExpectationKind::Raises ? "an error" : *expectation.expected;
        std::string actual;
        bool pass = false;
        if (!statement) {
            actual = "<no statement to check>";
        } else if (errored && run.failed_statement == statement) {
            pass = expectation.kind == ExpectationKind::Raises;
            actual = describe_error(*run.completion.error);
        } else if (auto it = last_value.find(statement); it != last_value.end()) {
            actual = display(it->second);
            pass = expectation.kind == ExpectationKind::Answers && actual == expected;
        } else {
            actual = "<not reached>";
        }
        if (pass) {
            ++result.passed;
        } else {
            result.failed.push_back({expectation.span, expected, actual});
        }
    }
    return result;
}

std::string format_diagnostic(const lint::Diagnostic& d) {
    return location(d.file, d.span) + ": " + d.rule + " " + d.message;
}

std::string diagnostics_to_json(const std::vector<lint::Diagnostic>& diagnostics) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& d : diagnostics) {
        nlohmann::ordered_json item;
        item["file"] = d.file;
        item["rule"] = d.rule;
        item["severity"] = std::string(lint::to_string(d.severity));
        item["line"] = d.span.line;
        item["col"] = d.span.column;
        item["endLine"] = d.span.end_line;
        item["endCol"] = d.span.end_column;
        item["message"] = d.message;
        array.push_back(std::move(item));
    }
    return array.dump(2);
}

int cmd_run(const std::string& file, const RunOptions& options, std::ostream& out, std::ostream& err) {
    std::string source;
    try {
        source = read_file(file);
    } catch (const std::exception& e) {
        err << "jssec: " << e.what() << "\n";
        return kExitUsage;
    }
    std::shared_ptr<const syntax::Node> program;
    try {
        program = syntax::parse_program(source);
    } catch (const syntax::SyntaxError& e) {
        report_syntax_error(err, file, e);
        return kExitUsage;
    }
    auto realm = runtime::Realm::create();
    runtime::EvalHooks hooks;
    if (options.trace) {
        hooks.on_statement = [&out](const runtime::StatementRecord& record) { out << display(record.value) << "\n"; };
    }
    runtime::Interpreter interpreter(*realm, hooks);
    const runtime::ProgramResult result = interpreter.eval_program(program);
    if (result.completion.is_error()) {
        const runtime::ErrorInfo& info = *result.completion.error;
        err << location(file, info.span.value_or(syntax::SourceSpan{})) << ": error: " << info.describe() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_lint(const std::vector<std::string>& files, const LintOptions& options, std::ostream& out,
             std::ostream& err) {
    std::vector<lint::Diagnostic> diagnostics;
    bool input_error = false;
    for (const std::string& file : files) {
        std::string source;
        try {
            source = read_file(file);
        } catch (const std::exception& e) {
            err << "jssec: " << e.what() << "\n";
            input_error = true;
            continue;
        }
        std::shared_ptr<const syntax::Node> program;
        try {
            program = syntax::parse_program(source);
        } catch (const syntax::SyntaxError& e) {
            report_syntax_error(err, file, e);
            input_error = true;
            continue;
        }
        const lint::ScopeModel model = lint::build_scope_model(*program);
        auto found = lint::lint_program(*program, model, options.rules, file);
        diagnostics.insert(diagnostics.end(), found.begin(), found.end());
        if (options.runtime) {
            auto realm = runtime::Realm::create();
            runtime::Interpreter interpreter(*realm);
            const auto result = interpreter.eval_program(program);
            auto leaks = lint::monitor_global_leaks(result.events, file, options.rules);
            diagnostics.insert(diagnostics.end(), leaks.begin(), leaks.end());
        }
    }
    lint::sort_diagnostics(diagnostics);
    if (options.format == LintFormat::Json) {
        out << diagnostics_to_json(diagnostics) << "\n";
    } else {
        for (const auto& d : diagnostics) out << format_diagnostic(d) << "\n";
    }
    if (input_error) return kExitUsage;
    return diagnostics.empty() ? kExitOk : kExitFailure;
}

int cmd_test(const std::string& dir, const TestOptions& options, std::ostream& out, std::ostream& err) {
    std::vector<fs::path> files;
    try {
        files = corpus_files(dir, options.filter);
    } catch (const fs::filesystem_error& e) {
        err << "jssec: cannot list " << dir << ": " << e.code().message() << "\n";
        return kExitUsage;
    }
    std::size_t files_passed = 0;
    std::size_t expectations = 0;
    std::size_t expectations_passed = 0;
    for (const fs::path& path : files) {
        const std::string name = path.filename().string();
        CorpusResult result;
        try {
            result = check_corpus_source(read_file(path), name);
        } catch (const std::exception& e) {
            err << "jssec: " << e.what() << "\n";
            return kExitUsage;
        }
        expectations += result.total;
        expectations_passed += result.passed;
        if (result.ok()) ++files_passed;
        out << (result.ok() ? "PASS " : "FAIL ") << name << " (" << result.passed << "/" << result.total << ")\n";
        for (const auto& failure : result.failed) {
            out << "  " << location(name, failure.span) << ": expected " << failure.expected << ", got "
                << failure.actual << "\n";
        }
    }
    out << files_passed << "/" << files.size() << " files passed, " << expectations_passed << "/" << expectations
        << " expectations\n";
    return files_passed == files.size() ? kExitOk : kExitFailure;
}

}  // namespace jssec::cli
