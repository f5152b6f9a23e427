#pragma once

#include <functional>
#include <string>
#include <vector>

namespace phl {

// One invariant check. run(max_degree) returns the empty string on success and
// a human-readable counterexample (inputs plus both sides in canonical form)
// on failure. Checks clamp their own inner bounds when a cheaper degree is
// required; max_degree only ever lowers work.
struct Check {
    std::string name;
    std::function<std::string(int)> run;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::string suite;
    int max_degree = 0;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    int passed() const;
    int failed() const;
    bool all_passed() const { return failed() == 0; }
};

// Per-module check collections.
std::vector<Check> poset_checks();
std::vector<Check> algebra_checks();
std::vector<Check> pairing_checks();
std::vector<Check> fqsym_checks();

// Suites: poset, algebra, pairing, fqsym, all.
bool is_known_suite(const std::string& name);
std::vector<std::string> suite_names();

// Runs every check of the suite at the given bound, sorted by name; failures
// carry their counterexample; a thrown exception fails the check with its
// message. Returns all results (it never throws on check failure).
VerifyReport run_suite(const std::string& suite, int max_degree);

// Runs a single named check from any suite; empty optional-style contract:
// throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name, int max_degree);

std::string report_to_text(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

} // namespace phl
