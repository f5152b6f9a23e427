#include "phl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace phl {

namespace {

std::vector<Check> checks_for(const std::string& suite) {
    if (suite == "poset") return poset_checks();
    if (suite == "algebra") return algebra_checks();
    if (suite == "pairing") return pairing_checks();
    if (suite == "fqsym") return fqsym_checks();
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto& name : {"poset", "algebra", "pairing", "fqsym"}) {
            auto part = checks_for(name);
            for (auto& c : part) all.push_back(std::move(c));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

CheckResult execute(const Check& check, int max_degree) {
    CheckResult result;
    result.name = check.name;
    auto start = std::chrono::steady_clock::now();
    try {
        result.detail = check.run(max_degree);
        result.pass = result.detail.empty();
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

} // namespace

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
}

int VerifyReport::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

bool is_known_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

std::vector<std::string> suite_names() {
    return {"poset", "algebra", "pairing", "fqsym", "all"};
}

VerifyReport run_suite(const std::string& suite, int max_degree) {
    VerifyReport report;
    report.suite = suite;
    report.max_degree = max_degree;
    auto checks = checks_for(suite);
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    auto start = std::chrono::steady_clock::now();
    for (const auto& check : checks) report.checks.push_back(execute(check, max_degree));
    auto stop = std::chrono::steady_clock::now();
    report.seconds = std::chrono::duration<double>(stop - start).count();
    return report;
}

CheckResult run_check(const std::string& name, int max_degree) {
    for (const auto& check : checks_for("all"))
        if (check.name == name) return execute(check, max_degree);
    throw std::invalid_argument("unknown check: " + name);
}

std::string report_to_text(const VerifyReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.seconds
            << "s)\n";
        if (!c.pass) out << "     " << c.detail << "\n";
    }
    out << "suite " << report.suite << ": " << report.passed() << " passed, "
        << report.failed() << " failed (max degree " << report.max_degree << ", "
        << report.seconds << "s)\n";
    return out.str();
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["max_degree"] = report.max_degree;
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["seconds"] = report.seconds;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        entry["seconds"] = c.seconds;
        j["checks"].push_back(entry);
    }
    return j.dump(2) + "\n";
}

} // namespace phl
