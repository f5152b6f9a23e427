// Acceptance gate: eleven criteria, each backed by named verification checks
// run at fixed degree bounds with a wall-clock budget. Prints one line per
// criterion and exits nonzero if any criterion fails its checks or its budget.

#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "phl/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    const char* summary;
    double budget_seconds;
    std::vector<std::pair<const char*, int>> checks; // name, degree bound
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"C1", "deformed products match the pinned tables", 1.0,
         {{"algebra_product_tables", 0}}},
        {"C2", "deformed coproducts match the pinned tables", 1.0,
         {{"algebra_coproduct_tables", 0}}},
        {"C3", "both pairings match the pinned small matrices", 5.0,
         {{"first_pairing_small_tables", 3}, {"second_pairing_small_tables", 3}}},
        {"C4", "associativity and coassociativity through degree 6", 120.0,
         {{"product_associativity", 6}, {"coproduct_coassociativity", 6}}},
        {"C5", "coproduct is multiplicative through degree 5", 60.0,
         {{"coproduct_product_compatibility", 5}, {"coproduct_concat_hopf_forms", 5}}},
        {"C6", "pairing adjunctions through degree 5", 120.0,
         {{"first_pairing_concat_adjunction", 5},
          {"first_pairing_over_adjunction", 5},
          {"second_pairing_adjunctions", 5}}},
        {"C7", "triangularity against the order exchange", 180.0,
         {{"first_pairing_triangular_minimum", 5},
          {"first_pairing_gram_triangular_determinant", 4}}},
        {"C8", "symmetry and rescaling reparametrizations", 120.0,
         {{"coproduct_special_slices", 4},
          {"product_symmetry_reparametrizations", 4},
          {"coproduct_symmetry_reparametrizations", 4},
          {"first_pairing_isometries", 4},
          {"first_pairing_rescaling_isometries", 4},
          {"rescaling_morphisms", 4}}},
        {"C9", "linear extension map is a Hopf isometry", 60.0,
         {{"fqsym_shuffle_products", 3},
          {"fqsym_coproduct_pinned_examples", 5},
          {"fqsym_theta_algebra_morphism", 5},
          {"fqsym_theta_coalgebra_morphism", 5},
          {"fqsym_theta_isometry", 4}}},
        {"C10", "pairing degeneracy boundaries", 60.0,
         {{"second_pairing_nondegeneracy_boundary", 4},
          {"first_pairing_degeneracy_samples", 4}}},
        {"C11", "enumeration counts and pattern-class ideals", 60.0,
         {{"poset_count_matches_factorial", 6},
          {"poset_pattern_classes", 6},
          {"pattern_class_ideals", 4}}},
    };
    return list;
}

} // namespace

int main() {
    std::cout << std::fixed << std::setprecision(2);
    int failures = 0;
    double total = 0.0;
    for (const auto& criterion : criteria()) {
        bool pass = true;
        double elapsed = 0.0;
        std::string detail;
        for (const auto& [name, degree] : criterion.checks) {
            phl::CheckResult result = phl::run_check(name, degree);
            elapsed += result.seconds;
            if (!result.pass) {
                pass = false;
                detail = result.name + ": " + result.detail;
                break;
            }
        }
        if (pass && elapsed > criterion.budget_seconds) {
            pass = false;
            detail = "runtime exceeded budget";
        }
        total += elapsed;
        std::cout << (pass ? "PASS " : "FAIL ") << criterion.label << " "
                  << criterion.summary << " (" << elapsed << "s, budget "
                  << std::setprecision(0) << criterion.budget_seconds
                  << std::setprecision(2) << "s)\n";
        if (!pass) {
            std::cout << "     " << detail << "\n";
            ++failures;
        }
    }
    std::cout << "acceptance: " << (criteria().size() - failures) << "/"
              << criteria().size() << " criteria passed (" << total << "s)\n";
    return failures == 0 ? 0 : 1;
}
