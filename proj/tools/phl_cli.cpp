#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phl/algebra.hpp"
#include "phl/fqsym.hpp"
#include "phl/io.hpp"
#include "phl/pairing.hpp"
#include "phl/verify.hpp"

namespace {

constexpr int kEnumBound = 9;
constexpr int kGramBound = 5;
constexpr int kOperandBound = 8;

// Usage problems exit with 2; verification failures with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<int> env_degree_cap() {
    const char* raw = std::getenv("PHL_MAX_DEGREE");
    if (!raw || !*raw) return std::nullopt;
    std::string text(raw);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < 0)
        throw UsageError("PHL_MAX_DEGREE must be a nonnegative integer, got \"" + text + "\"");
    return value;
}

void require_within(int degree, int hard_bound, const std::optional<int>& cap,
                    const std::string& what) {
    if (degree < 0) throw UsageError(what + " must be nonnegative");
    if (degree > hard_bound)
        throw UsageError(what + " " + std::to_string(degree) + " exceeds the built-in bound " +
                         std::to_string(hard_bound));
    if (cap && degree > *cap)
        throw UsageError(what + " " + std::to_string(degree) + " exceeds PHL_MAX_DEGREE=" +
                         std::to_string(*cap));
}

phl::PlanePoset poset_arg(const std::string& text, const std::optional<int>& cap) {
    phl::PlanePoset p = phl::parse_poset(text);
    require_within(p.size(), kOperandBound, cap, "operand degree");
    return p;
}

std::array<std::optional<phl::Int>, phl::kNumVars> parse_assignments(
    const std::vector<std::string>& sets) {
    static const std::map<std::string, phl::Var> names = {{"q1", phl::Var::Q1},
                                                          {"q2", phl::Var::Q2},
                                                          {"q3", phl::Var::Q3},
                                                          {"q4", phl::Var::Q4},
                                                          {"t", phl::Var::T}};
    std::array<std::optional<phl::Int>, phl::kNumVars> out{};
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--set expects name=value, got \"" + s + "\"");
        std::string name = s.substr(0, eq);
        std::string value = s.substr(eq + 1);
        auto it = names.find(name);
        if (it == names.end()) throw UsageError("unknown variable in --set: \"" + name + "\"");
        std::size_t start = value.size() > 1 && value[0] == '-' ? 1 : 0;
        if (value.size() == start ||
            value.find_first_not_of("0123456789", start) != std::string::npos)
            throw UsageError("--set expects an integer value, got \"" + value + "\"");
        out[static_cast<std::size_t>(it->second)] = phl::Int(value);
    }
    return out;
}

void emit(const std::string& body) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
}

std::string csv_cell(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations in the deformed Hopf algebra of plane posets"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* enum_cmd = app.add_subcommand("enum", "list the basis in one degree");
    int enum_degree = 0;
    bool count_only = false;
    enum_cmd->add_option("n", enum_degree, "degree")->required();
    enum_cmd->add_flag("--count", count_only, "print only the number of elements");

    auto* product_cmd = app.add_subcommand("product", "deformed product of two basis elements");
    std::string left_text, right_text;
    product_cmd->add_option("P", left_text, "left operand, e.g. p:12")->required();
    product_cmd->add_option("Q", right_text, "right operand")->required();

    auto* coproduct_cmd =
        app.add_subcommand("coproduct", "deformed coproduct of a basis element");
    std::string coproduct_text;
    coproduct_cmd->add_option("P", coproduct_text, "operand")->required();

    auto* pair_cmd = app.add_subcommand("pair", "pairing of two basis elements");
    std::string pair_which, pair_left, pair_right;
    pair_cmd->add_option("--which", pair_which, "pairing family")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    pair_cmd->add_option("P", pair_left, "left operand")->required();
    pair_cmd->add_option("Q", pair_right, "right operand")->required();

    auto* gram_cmd = app.add_subcommand("gram", "pairing matrix of one degree");
    std::string gram_pairing;
    int gram_degree = 0;
    std::vector<std::string> gram_sets;
    gram_cmd->add_option("--pairing", gram_pairing, "pairing family")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    gram_cmd->add_option("--degree", gram_degree, "degree")->required();
    gram_cmd->add_option("--set", gram_sets, "integer substitutions, e.g. q2=0");

    auto* theta_cmd =
        app.add_subcommand("theta", "extension-listing image of a basis element");
    std::string theta_text;
    theta_cmd->add_option("P", theta_text, "operand")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string verify_positional, verify_suite;
    int verify_max_degree = 5;
    verify_cmd->add_option("SUITE", verify_positional, "suite name");
    verify_cmd->add_option("--suite", verify_suite, "suite name");
    verify_cmd->add_option("--max-degree", verify_max_degree, "degree bound")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto cap = env_degree_cap();

    if (*enum_cmd) {
        require_within(enum_degree, kEnumBound, cap, "degree");
        const auto& basis = phl::enumerate_posets(enum_degree);
        if (format == "json") {
            nlohmann::json j;
            j["degree"] = enum_degree;
            if (count_only) {
                j["count"] = basis.size();
            } else {
                auto& list = j["posets"] = nlohmann::json::array();
                for (const auto& p : basis) list.push_back(p.to_string());
            }
            emit(j.dump(2));
        } else if (count_only) {
            if (format == "csv") emit("count\n" + std::to_string(basis.size()));
            else emit(std::to_string(basis.size()));
        } else {
            std::string body = format == "csv" ? "poset\n" : "";
            for (const auto& p : basis) body += p.to_string() + "\n";
            emit(body);
        }
        return 0;
    }

    if (*product_cmd) {
        phl::PlanePoset p = poset_arg(left_text, cap);
        phl::PlanePoset q = poset_arg(right_text, cap);
        require_within(p.size() + q.size(), kOperandBound, std::nullopt, "total degree");
        phl::PosetCombo result = phl::product_q(phl::PosetCombo(p), phl::PosetCombo(q));
        if (format == "json") emit(phl::combo_to_json(result));
        else if (format == "csv") emit(phl::combo_to_csv(result));
        else emit(phl::combo_to_text(result));
        return 0;
    }

    if (*coproduct_cmd) {
        phl::TensorCombo result =
            phl::coproduct_q(phl::PosetCombo(poset_arg(coproduct_text, cap)));
        if (format == "json") emit(phl::combo_to_json(result));
        else if (format == "csv") emit(phl::combo_to_csv(result));
        else emit(phl::combo_to_text(result));
        return 0;
    }

    if (*pair_cmd) {
        phl::Pairing which = pair_which == "first" ? phl::Pairing::FIRST : phl::Pairing::SECOND;
        phl::QPoly value = phl::pair(poset_arg(pair_left, cap), poset_arg(pair_right, cap), which);
        if (format == "json") {
            nlohmann::json j;
            j["value"] = value.to_string();
            emit(j.dump(2));
        } else if (format == "csv") {
            emit("value\n" + csv_cell(value.to_string()));
        } else {
            emit(value.to_string());
        }
        return 0;
    }

    if (*gram_cmd) {
        require_within(gram_degree, kGramBound, cap, "degree");
        phl::Pairing which =
            gram_pairing == "first" ? phl::Pairing::FIRST : phl::Pairing::SECOND;
        auto entries = phl::gram(gram_degree, which);
        if (!gram_sets.empty()) {
            auto assignment = parse_assignments(gram_sets);
            for (auto& row : entries)
                for (auto& cell : row) cell = cell.specialize(assignment);
        }
        const auto& basis = phl::enumerate_posets(gram_degree);
        if (format == "json") emit(phl::gram_to_json(gram_degree, gram_pairing, entries, basis));
        else emit(phl::gram_to_csv(entries, basis));
        return 0;
    }

    if (*theta_cmd) {
        phl::PermCombo result = phl::theta(phl::PosetCombo(poset_arg(theta_text, cap)));
        if (format == "json") emit(phl::combo_to_json(result));
        else if (format == "csv") emit(phl::combo_to_csv(result));
        else emit(phl::combo_to_text(result));
        return 0;
    }

    if (*verify_cmd) {
        std::string suite = "all";
        if (!verify_suite.empty() && !verify_positional.empty() &&
            verify_suite != verify_positional)
            throw UsageError("conflicting suite names \"" + verify_positional + "\" and \"" +
                             verify_suite + "\"");
        if (!verify_suite.empty()) suite = verify_suite;
        else if (!verify_positional.empty()) suite = verify_positional;
        if (!phl::is_known_suite(suite)) {
            std::string known;
            for (const auto& name : phl::suite_names()) known += " " + name;
            throw UsageError("unknown suite \"" + suite + "\"; known:" + known);
        }
        if (verify_max_degree < 0) throw UsageError("--max-degree must be nonnegative");
        int bound = verify_max_degree;
        if (cap && bound > *cap) bound = *cap;
        phl::VerifyReport report = phl::run_suite(suite, bound);
        if (format == "json") {
            emit(phl::report_to_json(report));
        } else if (format == "csv") {
            std::string body = "check,pass,seconds,detail\n";
            for (const auto& check : report.checks) {
                char seconds[32];
                std::snprintf(seconds, sizeof(seconds), "%.2f", check.seconds);
                body += csv_cell(check.name) + "," + (check.pass ? "true" : "false") + "," +
                        seconds + "," + csv_cell(check.detail) + "\n";
            }
            emit(body);
        } else {
            emit(phl::report_to_text(report));
        }
        return report.all_passed() ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
