#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jssec/lint/diagnostic.hpp"
#include "jssec/lint/rules.hpp"
#include "jssec/syntax/source_span.hpp"

namespace jssec::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct ExpectationFailure {
    syntax::SourceSpan span;  // of the expectation comment
    std::string expected;     // display text, "an error", or "<parse>"
    std::string actual;
};

struct CorpusResult {
    std::string file;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<ExpectationFailure> failed;

    bool ok() const { return failed.empty(); }
};

// Runs one annotated program and checks each `// answers` / `// raises an
// error` comment against the statement it annotates.
CorpusResult check_corpus_source(std::string_view source, const std::string& file);

// *.js files of `dir` whose name contains `filter`, sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir, std::string_view filter = "");

std::string read_file(const std::filesystem::path& path);  // throws std::runtime_error

struct RunOptions {
    bool trace = false;
};

enum class LintFormat { Text, Json };

struct LintOptions {
    LintFormat format = LintFormat::Text;
    lint::RuleConfig rules = lint::RuleConfig::all();
    bool runtime = false;  // also execute each file and add R001..R003
};

struct TestOptions {
    std::string filter;
};

// 0 ok, 1 runtime error, 2 unreadable or unparsable input.
int cmd_run(const std::string& file, const RunOptions& options, std::ostream& out, std::ostream& err);
// 0 no diagnostics, 1 diagnostics, 2 unreadable or unparsable input.
int cmd_lint(const std::vector<std::string>& files, const LintOptions& options, std::ostream& out,
             std::ostream& err);
// 0 when every file passes every expectation.
int cmd_test(const std::string& dir, const TestOptions& options, std::ostream& out, std::ostream& err);

// JSON array; each element has exactly file, rule, severity, line, col,
// endLine, endCol and message.
std::string diagnostics_to_json(const std::vector<lint::Diagnostic>& diagnostics);
std::string format_diagnostic(const lint::Diagnostic& diagnostic);

}  // namespace jssec::cli
