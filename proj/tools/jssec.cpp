#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jssec/cli/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"jssec: run, lint and golden-test programs in a small JavaScript subset"};
    app.require_subcommand(1);

    std::string run_file;
    jssec::cli::RunOptions run_options;
    auto* run = app.add_subcommand("run", "execute a program");
    run->add_option("file", run_file, "program to run")->required();
    run->add_flag("--trace", run_options.trace, "print the value of every top-level expression statement");

    std::vector<std::string> lint_files;
    std::string format = "text";
    std::string rules;
    bool lint_runtime = false;
    auto* lint = app.add_subcommand("lint", "report security-relevant patterns");
    lint->add_option("files", lint_files, "programs to lint")->required();
    lint->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    lint->add_option("--rules", rules, "comma-separated rule ids to enable (default: all)");
    lint->add_flag("--runtime", lint_runtime, "also run each program and report R001-R003");

    std::string corpus_dir;
    jssec::cli::TestOptions test_options;
    auto* test = app.add_subcommand("test", "check the expectation comments of a corpus directory");
    test->add_option("dir", corpus_dir, "directory of annotated .js files")->required();
    test->add_option("--filter", test_options.filter, "only files whose name contains this text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : jssec::cli::kExitUsage;
    }

    if (run->parsed()) return jssec::cli::cmd_run(run_file, run_options, std::cout, std::cerr);
    if (lint->parsed()) {
        jssec::cli::LintOptions options;
        options.format = format == "json" ? jssec::cli::LintFormat::Json : jssec::cli::LintFormat::Text;
        options.runtime = lint_runtime;
        if (!rules.empty()) {
            try {
                options.rules = jssec::lint::RuleConfig::parse(rules);
            } catch (const jssec::lint::UnknownRuleError& e) {
                std::cerr << "jssec: " << e.what() << "\n";
                return jssec::cli::kExitUsage;
            }
        }
        return jssec::cli::cmd_lint(lint_files, options, std::cout, std::cerr);
    }
    return jssec::cli::cmd_test(corpus_dir, test_options, std::cout, std::cerr);
}
