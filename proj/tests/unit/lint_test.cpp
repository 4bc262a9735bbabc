#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>

#include "jssec/cli/commands.hpp"
#include "jssec/lint/linter.hpp"
#include "jssec/lint/monitor.hpp"
#include "jssec/syntax/parser.hpp"
#include "test_support.hpp"

using namespace jssec::lint;

namespace {

std::vector<std::string> rules_of(const std::vector<Diagnostic>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.rule);
    return out;
}

std::vector<std::string> rules(std::string_view source, const RuleConfig& config = RuleConfig::all()) {
    return rules_of(lint_source(source, "t.js", config));
}

int count(const std::vector<std::string>& ids, const std::string& id) {
    return static_cast<int>(std::count(ids.begin(), ids.end(), id));
}

std::vector<Diagnostic> monitor(std::string_view source) {
    jssec::testing::Session s;
    const auto result = s.run(source);
    return monitor_global_leaks(result.events, "t.js");
}

const jssec::syntax::Node* find_identifier(const jssec::syntax::Node& node, const std::string& name, int skip = 0) {
    std::vector<const jssec::syntax::Node*> found;
    // Depth-first in source order.
    std::function<void(const jssec::syntax::Node&)> walk = [&](const jssec::syntax::Node& n) {
        if (n.kind == jssec::syntax::NodeKind::Identifier && n.name == name) found.push_back(&n);
        for (const auto& child : n.children) {
            if (child) walk(*child);
        }
    };
    walk(node);
    return skip < static_cast<int>(found.size()) ? found[skip] : nullptr;
}

}  // namespace

TEST_SUITE("scope model") {
    TEST_CASE("params and vars are local, undeclared names are free") {
        const auto program = jssec::syntax::parse_program("function f(a) { var b; c = 1; a = 2; b = 3; }");
        const auto model = build_scope_model(*program);
        REQUIRE(model.scopes.size() == 2);
        CHECK(model.scopes[1].params == std::vector<std::string>{"a"});
        CHECK(model.scopes[1].vars == std::vector<std::string>{"b"});
        CHECK(model.classify("a", 1) == NameClass::Local);
        CHECK(model.classify("b", 1) == NameClass::Local);
        CHECK(model.classify("c", 1) == NameClass::Free);
        CHECK(model.classify("f", 1) == NameClass::Outer);
        CHECK(model.classify("window", 1) == NameClass::Builtin);
        CHECK(model.use_of(find_identifier(*program, "c"))->cls == NameClass::Free);
        CHECK(model.use_of(find_identifier(*program, "c"))->is_write);
    }

    TEST_CASE("every identifier use is classified") {
        const auto program = jssec::syntax::parse_program(
            "var top = 1; function outer(p) { var mid; function inner() { return p + mid + top + free + Object; } }");
        const auto model = build_scope_model(*program);
        for (const auto& use : model.uses) {
            if (use.cls == NameClass::Free || use.cls == NameClass::Builtin) {
                CHECK(use.resolved_scope == -1);
            } else {
                CHECK(use.resolved_scope >= 0);
                CHECK(model.scopes[use.resolved_scope].declares(use.name));
            }
        }
        CHECK(model.use_of(find_identifier(*program, "free"))->cls == NameClass::Free);
        CHECK(model.use_of(find_identifier(*program, "p"))->cls == NameClass::Outer);
    }

    TEST_CASE("var x = x resolves both occurrences to the hoisted local") {
        const auto program = jssec::syntax::parse_program(
            "function foo(x) { return function () { var x = x; return x; }; }");
        const auto model = build_scope_model(*program);
        const auto* init = find_identifier(*program, "x");
        REQUIRE(init);
        const auto* use = model.use_of(init);
        REQUIRE(use);
        CHECK(use->cls == NameClass::Local);
        CHECK(use->resolved_scope == 2);
    }

    TEST_CASE("global-variable listing") {
        const auto program =
            jssec::syntax::parse_program("(function () { globalVar = 'setting global'; })(); window.globalVar;");
        const auto model = build_scope_model(*program);
        CHECK(model.use_of(find_identifier(*program, "globalVar"))->cls == NameClass::Free);
    }
}

TEST_SUITE("rules") {
    TEST_CASE("W001 implicit global") {
        const auto ds = lint_source("(function () { globalVar = 'setting global'; })();", "t.js");
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].rule == "W001");
        CHECK(ds[0].span.start().line == 1);
        CHECK(ds[0].span.start().column == 16);
        CHECK(ds[0].message.find("globalVar") != std::string::npos);
        CHECK(count(rules("var a; a = 1; function f(p) { var q; p = 1; q = 2; a = 3; }"), "W001") == 0);
        CHECK(count(rules("n++;"), "W001") == 1);
        CHECK(count(rules("for (k in {}) {}"), "W001") == 1);
        CHECK(count(rules("window.explicit = 1;"), "W001") == 0);
    }

    TEST_CASE("W002 with statement") {
        CHECK(rules("var o = {}; with (o) { }") == std::vector<std::string>{"W002"});
    }

    TEST_CASE("W003 constructor without new") {
        const auto ds = lint_source("var Person = function (n) { this.n = n; }; var p = Person('John');", "t.js");
        CHECK(count(rules_of(ds), "W003") == 1);
        CHECK(count(rules("function Person() {} var p = new Person();"), "W003") == 0);
        CHECK(count(rules("var Lower = 1; function f() {} f();"), "W003") == 0);
    }

    TEST_CASE("W004 this in a plain-called function") {
        CHECK(count(rules("this;"), "W004") == 1);
        CHECK(count(rules("function f() { return this; } f();"), "W004") == 1);
        CHECK(count(rules("var o = {f: function () { return this; }}; o.f();"), "W004") == 0);
        CHECK(count(rules("function C() { this.a = 1; } new C();"), "W004") == 0);
    }

    TEST_CASE("W005 loose equality") {
        CHECK(rules("var a, b; a == b;") == std::vector<std::string>{"W005"});
        CHECK(rules("var a, b; a != b;") == std::vector<std::string>{"W005"});
        CHECK(rules("var a, b; a === b; a !== b;").empty());
    }

    TEST_CASE("W006 eval") {
        CHECK(count(rules("eval('1');"), "W006") == 1);
        CHECK(count(rules("window.eval('1');"), "W006") == 1);
        CHECK(count(rules("eval.call(null, '1');"), "W006") == 1);
        CHECK(count(rules("var evaluate = 1;"), "W006") == 0);
    }

    TEST_CASE("W007 var self initialization") {
        CHECK(count(rules("function foo(x) { return function () { var x = x; return x; }; }"), "W007") == 1);
        CHECK(count(rules("function foo(x) { var x = x; }"), "W007") == 1);
        CHECK(count(rules("function foo() { var y = y; }"), "W007") == 0);
    }

    TEST_CASE("W008 __proto__ access") {
        CHECK(count(rules("var o = {}; o.__proto__;"), "W008") == 1);
        CHECK(count(rules("var o = {}; o['__proto__'];"), "W008") == 1);
        CHECK(count(rules("var o = {}; o.proto;"), "W008") == 0);
    }

    TEST_CASE("W009 constructor returning an object") {
        CHECK(count(rules("function Dog() { return {name: 'tintin'}; }"), "W009") == 1);
        CHECK(count(rules("function Dog() { return new Object(); }"), "W009") == 1);
        CHECK(count(rules("function Dog() { this.name = 'milou'; return 3; }"), "W009") == 0);
        CHECK(count(rules("function make() { return {}; }"), "W009") == 0);
    }

    TEST_CASE("unparsable input throws") {
        CHECK_THROWS_AS(lint_source("var = ;"), jssec::syntax::SyntaxError);
    }
}

TEST_SUITE("rule table") {
    TEST_CASE("explain_rule") {
        const auto w002 = explain_rule("W002");
        CHECK(w002.find("with") != std::string::npos);
        CHECK(w002.find("§12.10") != std::string::npos);
        CHECK(explain_rule("W006").find("eval") != std::string::npos);
        CHECK(explain_rule("R001").rfind("R001", 0) == 0);
        CHECK_THROWS_AS(explain_rule("W042"), UnknownRuleError);
        CHECK(all_rules().size() == 12);
    }

    TEST_CASE("rule config parsing") {
        CHECK(RuleConfig::parse("W001,W005").enabled.size() == 2);
        CHECK(RuleConfig::parse(" W001 , W005 ").is_enabled("W005"));
        CHECK_THROWS_AS(RuleConfig::parse("W001,X"), UnknownRuleError);
        CHECK(RuleConfig::all().is_enabled("R003"));
    }
}

TEST_SUITE("monitor") {
    TEST_CASE("this and window creates window.x") {
        const auto ds = monitor(
            "var obj = {x: 0, setX: function (val) { this.x = val; }};"
            "obj.setX(10); var f = obj.setX; f(90);");
        CHECK(count(rules_of(ds), "R001") == 1);
        CHECK(count(rules_of(ds), "R002") == 1);
        CHECK(ds[0].message.find("'x'") != std::string::npos);
    }

    TEST_CASE("not using new creates three globals") {
        const auto ds = monitor(
            "var Person = function (name, surname, age) { this.name = name; this.surname = surname; this.age = age; };"
            "var person = Person('John', 'Foo', 27);");
        std::vector<std::string> created;
        for (const auto& d : ds) {
            if (d.rule == "R001") created.push_back(d.message);
        }
        REQUIRE(created.size() == 3);
        CHECK(created[0].find("'name'") != std::string::npos);
        CHECK(created[1].find("'surname'") != std::string::npos);
        CHECK(created[2].find("'age'") != std::string::npos);
    }

    TEST_CASE("a fully declared program is quiet") {
        CHECK(monitor("var a = 1; function f(p) { var q = p; return q; } var r = f(a);").empty());
    }

    TEST_CASE("eval and repeated events") {
        const auto ds = monitor("function f() { leak = 1; } f(); f(); eval('1');");
        CHECK(rules_of(ds) == std::vector<std::string>{"R001", "R003"});
    }
}

TEST_SUITE("lint properties") {
    TEST_CASE("purity and ordering on the corpus") {
        for (const auto& path : jssec::cli::corpus_files(JSSEC_CORPUS_DIR, "")) {
            const auto source = jssec::cli::read_file(path);
            const auto first = lint_source(source, path.string());
            const auto second = lint_source(source, path.string());
            CHECK(first == second);
            CHECK(std::is_sorted(first.begin(), first.end(), [](const Diagnostic& a, const Diagnostic& b) {
                if (a.span.start() != b.span.start()) return a.span.start() < b.span.start();
                return a.rule < b.rule;
            }));
        }
    }

    TEST_CASE("config monotonicity: disabling a rule removes exactly its diagnostics") {
        const std::string source =
            "var Person = function (n) { this.n = n; }; var p = Person('x'); leak = 1;"
            "with (p) {} eval('1'); p == 1; p.__proto__;"
            "function Maker() { return {}; } function g(y) { var y = y; } this;";
        const auto all = lint_source(source, "t.js");
        for (const auto& info : all_rules()) {
            RuleConfig config = RuleConfig::all();
            config.enabled.erase(std::string(info.id));
            std::vector<Diagnostic> expected;
            for (const auto& d : all) {
                if (d.rule != info.id) expected.push_back(d);
            }
            CHECK(lint_source(source, "t.js", config) == expected);
        }
    }

    TEST_CASE("no false W001 on declared names") {
        std::mt19937 rng(2024);
        for (int round = 0; round < 100; ++round) {
            std::string program;
            std::vector<std::string> declared;
            const int globals = static_cast<int>(rng() % 4) + 1;
            for (int i = 0; i < globals; ++i) {
                declared.push_back("g" + std::to_string(i));
                program += "var g" + std::to_string(i) + ";";
            }
            const int fns = static_cast<int>(rng() % 3) + 1;
            for (int f = 0; f < fns; ++f) {
                program += "function f" + std::to_string(f) + "(p) { var l;";
                for (int s = 0; s < 5; ++s) {
                    switch (rng() % 4) {
                        case 0: program += "p = " + std::to_string(s) + ";"; break;
                        case 1: program += "l = p;"; break;
                        case 2: program += declared[rng() % declared.size()] + " = l;"; break;
                        default: program += "for (var k in {}) { k = 1; }"; break;
                    }
                }
                program += "}";
            }
            CHECK_MESSAGE(count(rules(program), "W001") == 0, program);
        }
    }
}
