#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>

#include "phl/verify.hpp"

using namespace phl;

TEST_CASE("suite registry") {
    CHECK(suite_names() ==
          std::vector<std::string>{"poset", "algebra", "pairing", "fqsym", "all"});
    for (const auto& name : suite_names()) CHECK(is_known_suite(name));
    CHECK_FALSE(is_known_suite("nope"));
    CHECK_FALSE(is_known_suite(""));
    CHECK(poset_checks().size() == 10);
    CHECK(algebra_checks().size() == 18);
    CHECK(pairing_checks().size() == 18);
    CHECK(fqsym_checks().size() == 13);
}

TEST_CASE("check names are unique and runnable") {
    std::set<std::string> names;
    for (const auto& list : {poset_checks(), algebra_checks(), pairing_checks(),
                             fqsym_checks()}) {
        for (const auto& check : list) {
            CHECK_FALSE(check.name.empty());
            CHECK(names.insert(check.name).second);
            CHECK(bool(check.run));
        }
    }
    CHECK(names.size() == 59);
}

TEST_CASE("single check execution") {
    CheckResult r = run_check("poset_count_matches_factorial", 4);
    CHECK(r.name == "poset_count_matches_factorial");
    CHECK(r.pass);
    CHECK(r.detail.empty());
    CHECK(r.seconds >= 0.0);
    CHECK_THROWS_AS(run_check("no_such_check", 3), std::invalid_argument);
}

TEST_CASE("poset suite passes at a small bound") {
    VerifyReport report = run_suite("poset", 4);
    CHECK(report.suite == "poset");
    CHECK(report.max_degree == 4);
    CHECK(report.checks.size() == 10);
    CHECK(report.all_passed());
    CHECK(report.passed() == 10);
    CHECK(report.failed() == 0);
    for (std::size_t i = 1; i < report.checks.size(); ++i)
        CHECK(report.checks[i - 1].name < report.checks[i].name);
}

TEST_CASE("combined suite passes at a tiny bound") {
    VerifyReport report = run_suite("all", 2);
    CHECK(report.checks.size() == 59);
    for (const auto& c : report.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK_THROWS_AS(run_suite("bogus", 2), std::invalid_argument);
}

TEST_CASE("report rendering") {
    VerifyReport report;
    report.suite = "demo";
    report.max_degree = 3;
    report.checks.push_back({"alpha_check", true, "", 0.25});
    report.checks.push_back({"beta_check", false, "lhs != rhs somewhere", 1.5});
    report.seconds = 1.75;
    std::string text = report_to_text(report);
    CHECK(text.find("PASS alpha_check (0.25s)") != std::string::npos);
    CHECK(text.find("FAIL beta_check") != std::string::npos);
    CHECK(text.find("lhs != rhs somewhere") != std::string::npos);
    CHECK(text.find("suite demo: 1 passed, 1 failed (max degree 3") != std::string::npos);
    std::string json = report_to_json(report);
    CHECK(json.find("\"suite\": \"demo\"") != std::string::npos);
    CHECK(json.find("\"passed\": 1") != std::string::npos);
    CHECK(json.find("\"failed\": 1") != std::string::npos);
    CHECK(json.find("\"pass\": false") != std::string::npos);
}
