#pragma once

#include <string>
#include <vector>

#include "permclass/generating_functions.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    std::string scope;
    /// Counterexamples or other findings, capped in length.
    std::vector<std::string> details;

    std::string status() const { return passed ? "pass" : "fail"; }
};

struct Report {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
    std::string to_json() const;
    std::string to_text() const;
};

// Individual checks. Each is exhaustive over the stated range.

/// Av(2341, 4123) membership against (3+1)-freeness of the induced poset.
CheckResult check_poset_equivalence(int n_max);
/// The structural conditions against simple + Av(2341, 4123, 3412), 3 <= n.
CheckResult check_theorem_equivalence(int n_max);
/// Two-decreasing juxtaposition exists iff the permutation is in Av(123, 3412).
CheckResult check_juxtaposition(int n_max);
/// Simple members of Av(2341, 4123) containing 123 and 3412 are exactly 5274163.
CheckResult check_both_patterns(int n_max);
/// Two simple members avoid 123 and 3412 at each even length, and the
/// classification of simple members is a partition.
CheckResult check_parallel_census(int n_max);
/// The block layouts for the two extremal hypotheses, in both directions.
CheckResult check_extremal_forms(int n_max);
/// Inflations of small simple members: in the class iff every part decreases.
CheckResult check_inflation_proposition(int n_max);
/// Decompose/inflate roundtrip, decomposition uniqueness, simplicity versus
/// skeleton, and containment under the three symmetries.
CheckResult check_core_roundtrips(int roundtrip_max, int uniqueness_max, int symmetry_host_max);

CheckResult check_class_counts(int n_max, int order, int jobs);
CheckResult check_simple_counts(int n_max, int jobs);
CheckResult check_structural_counts(int n_max, int jobs);
CheckResult check_sum_indecomposables(int n_max, int jobs);
CheckResult check_catalan(int n_max);
CheckResult check_summation(int order);
CheckResult check_assembly(int order);
CheckResult check_residual(int order, const QuadraticCoefficients& q);
/// Uses f to order + 1 so that the ratio a_{order+1} / a_order is reported.
CheckResult check_growth_rate(int order, const QuadraticCoefficients& q);

struct VerifyOptions {
    int jobs = 1;
    /// Adds 1 to the constant term of P0 before the quadratic checks.
    bool corrupt_p0 = false;
};

/// Requires n_enum >= 4 and n_series >= n_enum.
Report verify_all(int n_enum, int n_series, const VerifyOptions& options = {});

}  // namespace permclass
