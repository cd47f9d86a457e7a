#include "permclass/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permclass/decomposition.hpp"
#include "permclass/enumeration.hpp"
#include "permclass/pattern.hpp"
#include "permclass/poset.hpp"
#include "permclass/structure.hpp"

namespace permclass {

namespace {

constexpr std::size_t max_details = 10;

const std::vector<Permutation> two_basis{{2, 3, 4, 1}, {4, 1, 2, 3}};
const std::vector<Permutation> three_basis{{2, 3, 4, 1}, {4, 1, 2, 3}, {3, 4, 1, 2}};
const Permutation p123{1, 2, 3};
const Permutation p3412{3, 4, 1, 2};

class Check {
public:
    Check(std::string name, std::string expected, std::string scope) {
        result_.name = std::move(name);
        result_.expected = std::move(expected);
        result_.scope = std::move(scope);
    }

    void fail(const std::string& detail) {
        ++failures_;
        if (result_.details.size() < max_details) result_.details.push_back(detail);
    }

    CheckResult finish(std::string actual) {
        result_.passed = failures_ == 0;
        result_.actual = failures_ == 0 ? std::move(actual)
                                         : std::to_string(failures_) + " failure(s); " + actual;
        return result_;
    }

private:
    CheckResult result_;
    long failures_ = 0;
};

std::string range(int low, int high) {
    return std::to_string(low) + " <= n <= " + std::to_string(high);
}

std::string approx(const Rational& q) {
    std::ostringstream out;
    out.precision(12);
    out << q.get_d();
    return out.str();
}

// Compare integer counts for n in [low, high].
void compare_counts(Check& check, const CountTable& a, const CountTable& b, int low, int high) {
    for (int n = low; n <= high; ++n) {
        const Integer x = a.at(n);
        const Integer y = b.at(n);
        if (x != y) {
            check.fail("n=" + std::to_string(n) + ": " + a.source + " " + x.get_str() + " vs " +
                       b.source + " " + y.get_str());
        }
    }
}

std::string listing(const CountTable& t, int low, int high) {
    std::string out;
    for (int n = low; n <= high; ++n) {
        if (!out.empty()) out += ",";
        out += t.at(n).get_str();
    }
    return out;
}

void series_equal(Check& check, const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n) {
        if (a[n] != b[n]) {
            check.fail("x^" + std::to_string(n) + ": " + a[n].get_str() + " vs " + b[n].get_str());
        }
    }
}

bool decreasing(const Permutation& p) { return p == Permutation::decreasing(p.size()); }

// Every way to cut p into >= 2 consecutive intervals whose skeleton is simple
// and respects the first-part rule for 12 and 21.
std::vector<Decomposition> all_valid_decompositions(const Permutation& p) {
    const int n = p.size();
    std::vector<Decomposition> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> starts{0};
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) starts.push_back(i);
        }
        if (starts.size() < 2) continue;
        starts.push_back(n);
        bool ok = true;
        std::vector<int> representatives;
        std::vector<Permutation> parts;
        for (std::size_t s = 0; s + 1 < starts.size() && ok; ++s) {
            std::vector<int> block(p.begin() + starts[s], p.begin() + starts[s + 1]);
            const auto [lo, hi] = std::minmax_element(block.begin(), block.end());
            ok = *hi - *lo + 1 == static_cast<int>(block.size());
            representatives.push_back(*lo);
            parts.push_back(Permutation::pattern_of(block));
        }
        if (!ok) continue;
        const Permutation skeleton = Permutation::pattern_of(representatives);
        if (!is_simple(skeleton)) continue;
        if (skeleton == Permutation{1, 2} &&
            sum_skew_status(parts[0]) == SumSkewStatus::sum_decomposable) {
            continue;
        }
        if (skeleton == Permutation{2, 1} &&
            sum_skew_status(parts[0]) == SumSkewStatus::skew_decomposable) {
            continue;
        }
        out.push_back({skeleton, parts});
    }
    return out;
}

void all_patterns_up_to(int k, std::vector<Permutation>& out) {
    for (int n = 1; n <= k; ++n) {
        for (auto& p : all_permutations(n)) out.push_back(std::move(p));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

CheckResult check_poset_equivalence(int n_max) {
    Check check("poset_equivalence", "Av(2341,4123) membership == (3+1)-free poset", range(0, n_max));
    long tested = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            ++tested;
            const bool member = avoids_all(p, two_basis);
            const bool free = is_three_plus_one_free(poset_from_perm(p));
            if (member != free) check.fail(p.to_string());
        }
    }
    return check.finish(std::to_string(tested) + " permutations compared");
}

CheckResult check_theorem_equivalence(int n_max) {
    Check check("theorem_equivalence",
                "structural conditions == simple and in Av(2341,4123,3412)", range(3, n_max));
    long tested = 0;
    long members = 0;
    for (int n = 3; n <= n_max; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            ++tested;
            const bool brute = avoids_all(p, three_basis) && is_simple(p);
            bool structural = false;
            try {
                structural = satisfies_theorem_conditions(p);
            } catch (const std::exception& e) {
                check.fail(p.to_string() + " threw: " + e.what());
                continue;
            }
            if (brute) ++members;
            if (brute != structural) {
                check.fail(p.to_string() + (brute ? " member rejected" : " non-member accepted"));
            }
        }
    }
    return check.finish(std::to_string(tested) + " permutations compared, " +
                        std::to_string(members) + " simple members");
}

CheckResult check_juxtaposition(int n_max) {
    Check check("juxtaposition", "decreasing juxtaposition exists iff in Av(123,3412)",
                range(0, n_max));
    long members = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const bool member = avoids(p, p123) && avoids(p, p3412);
            const bool split = decreasing_juxtaposition(p).has_value();
            members += member;
            if (member != split) check.fail(p.to_string());
        }
    }
    return check.finish(std::to_string(members) + " members of Av(123,3412)");
}

CheckResult check_both_patterns(int n_max) {
    Check check("both_123_and_3412", "{5274163}", range(4, n_max));
    std::vector<Permutation> found;
    for (int n = 4; n <= n_max; ++n) {
        for (const Permutation& p : list_class(two_basis, n)) {
            if (contains(p, p123) && contains(p, p3412) && is_simple(p)) found.push_back(p);
        }
    }
    std::string actual = "{";
    for (std::size_t i = 0; i < found.size(); ++i) actual += (i ? "," : "") + found[i].to_string();
    actual += "}";
    std::vector<Permutation> expected;
    if (n_max >= 7) expected.push_back(Permutation{5, 2, 7, 4, 1, 6, 3});
    if (found != expected) check.fail("found " + actual);
    return check.finish(actual);
}

CheckResult check_parallel_census(int n_max) {
    Check check("parallel_alternation_census",
                "2 simple members avoiding 123 and 3412 per even length; categories partition",
                "census " + range(4, n_max) + ", partition " + range(4, std::min(n_max, 9)));
    std::vector<Permutation> basis(two_basis);
    basis.push_back(p123);
    basis.push_back(p3412);
    std::string counts;
    for (int n = 4; n <= n_max; ++n) {
        std::vector<Permutation> simples;
        for (const Permutation& p : list_class(basis, n)) {
            if (is_simple(p)) simples.push_back(p);
        }
        if (n % 2 == 1) {
            if (!simples.empty()) check.fail("odd length " + std::to_string(n) + " has some");
            continue;
        }
        counts += (counts.empty() ? "" : ",") + std::to_string(simples.size());
        std::vector<Permutation> expected{parallel_alternation(n, Juxtaposition::horizontal),
                                          parallel_alternation(n, Juxtaposition::vertical)};
        std::sort(expected.begin(), expected.end());
        if (simples != expected) check.fail("n=" + std::to_string(n));
    }
    for (int n = 4; n <= std::min(n_max, 9); ++n) {
        for (const Permutation& p : list_class(two_basis, n)) {
            if (!is_simple(p)) continue;
            const SimpleCategory c = classify_simple(p);
            const bool has123 = contains(p, p123);
            const bool has3412 = contains(p, p3412);
            bool ok = false;
            switch (c) {
                case SimpleCategory::contains123_only: ok = has123 && !has3412; break;
                case SimpleCategory::contains3412_only: ok = !has123 && has3412; break;
                case SimpleCategory::both_is_5274163:
                    ok = p == Permutation{5, 2, 7, 4, 1, 6, 3};
                    break;
                case SimpleCategory::neither_parallel_alternation:
                    ok = is_parallel_alternation(p) && !has123 && !has3412;
                    break;
            }
            if (!ok) check.fail(p.to_string() + " classified as " + to_string(c));
        }
    }
    return check.finish("even-length counts " + counts);
}

CheckResult check_extremal_forms(int n_max) {
    Check check("extremal_forms",
                "members with max before min (first > last) fit a layout; layout instances are members",
                range(0, n_max));
    long hypotheses = 0;
    long instances = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const bool member = avoids_all(p, three_basis);
            for (ExtremalDirection dir :
                 {ExtremalDirection::max_before_min, ExtremalDirection::first_greater_than_last}) {
                const char* tag = dir == ExtremalDirection::max_before_min ? "max-before-min"
                                                                           : "first-greater";
                for (const GridTemplate& t : extremal_templates(dir)) {
                    if (matches_template(p, t)) {
                        ++instances;
                        if (!member) check.fail(p.to_string() + " fits '" + t.name + "'");
                    }
                }
                if (!member || n <= 2) continue;
                const std::vector<int> pos = p.positions();
                const bool hypothesis = dir == ExtremalDirection::max_before_min
                                            ? pos[n - 1] < pos[0]
                                            : p[0] > p[n - 1];
                if (!hypothesis) continue;
                ++hypotheses;
                if (!matches_extremal_forms(p, dir)) check.fail(p.to_string() + " " + tag);
            }
        }
    }
    return check.finish(std::to_string(hypotheses) + " hypothesis cases, " +
                        std::to_string(instances) + " layout instances");
}

CheckResult check_inflation_proposition(int n_max) {
    Check check("inflation_proposition",
                "inflation of a simple member is in Av(2341,4123) iff every part decreases",
                "skeletons 4 <= |s| <= 6, parts from {1,21,321,12,132,213}, total length <= " +
                    std::to_string(n_max));
    const std::vector<Permutation> pool{{1}, {2, 1}, {3, 2, 1}, {1, 2}, {1, 3, 2}, {2, 1, 3}};
    long tested = 0;
    for (int m = 4; m <= std::min(6, n_max); ++m) {
        for (const Permutation& skeleton : list_class(two_basis, m)) {
            if (!is_simple(skeleton)) continue;
            std::vector<int> choice(static_cast<std::size_t>(m), 0);
            while (true) {
                int total = 0;
                for (int c : choice) total += pool[c].size();
                if (total <= n_max) {
                    std::vector<Permutation> parts;
                    bool all_decreasing = true;
                    for (int c : choice) {
                        parts.push_back(pool[c]);
                        all_decreasing = all_decreasing && decreasing(pool[c]);
                    }
                    const Permutation inflated = inflate(skeleton, parts);
                    ++tested;
                    if (avoids_all(inflated, two_basis) != all_decreasing) {
                        std::string text = skeleton.to_string() + "[";
                        for (std::size_t i = 0; i < parts.size(); ++i) {
                            text += (i ? "," : "") + parts[i].to_string();
                        }
                        check.fail(text + "]");
                    }
                }
                int i = 0;
                while (i < m && ++choice[i] == static_cast<int>(pool.size())) choice[i++] = 0;
                if (i == m) break;
            }
        }
    }
    return check.finish(std::to_string(tested) + " inflations tested");
}

CheckResult check_core_roundtrips(int roundtrip_max, int uniqueness_max, int symmetry_host_max) {
    Check check("core_roundtrips",
                "decompose/inflate roundtrip, unique decomposition, symmetry coherence",
                "roundtrip " + range(1, roundtrip_max) + ", uniqueness " + range(1, uniqueness_max) +
                    ", symmetry hosts " + range(0, symmetry_host_max) + " with patterns up to 4");
    long tested = 0;
    for (int n = 1; n <= roundtrip_max; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            ++tested;
            const Decomposition d = substitution_decompose(p);
            if (inflate(d.skeleton, d.parts) != p) check.fail("roundtrip " + p.to_string());
            if (!is_simple(d.skeleton)) check.fail("skeleton not simple " + p.to_string());
            if (is_simple(p) != (d.skeleton == p)) check.fail("simplicity " + p.to_string());
            if (n <= uniqueness_max) {
                std::vector<Decomposition> all = all_valid_decompositions(p);
                if (n == 1) all.push_back({Permutation{1}, {Permutation{1}}});
                if (all.size() != 1 || all[0] != d) check.fail("uniqueness " + p.to_string());
            }
        }
    }
    std::vector<Permutation> patterns;
    all_patterns_up_to(4, patterns);
    for (int n = 0; n <= symmetry_host_max; ++n) {
        for (const Permutation& host : all_permutations(n)) {
            for (const Permutation& pattern : patterns) {
                const bool base = contains(host, pattern);
                for (Symmetry s : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse}) {
                    if (contains(apply_symmetry(host, s), apply_symmetry(pattern, s)) != base) {
                        check.fail("symmetry " + host.to_string() + " / " + pattern.to_string());
                    }
                }
            }
        }
    }
    return check.finish(std::to_string(tested) + " permutations decomposed");
}

CheckResult check_class_counts(int n_max, int order, int jobs) {
    Check check("class_counts", "enumeration of Av(2341,4123) == coefficients of f",
                range(0, n_max));
    const CountTable enumerated = enumerate_class(two_basis, n_max, jobs);
    const CountTable series = series_counts(gf_f(order), n_max, two_basis);
    compare_counts(check, enumerated, series, 0, n_max);
    const long small[] = {1, 1, 2, 6, 22};
    for (int n = 0; n <= std::min(4, n_max); ++n) {
        if (enumerated.at(n) != small[n]) check.fail("n=" + std::to_string(n) + " small value");
    }
    return check.finish(listing(enumerated, 0, n_max));
}

CheckResult check_simple_counts(int n_max, int jobs) {
    Check check("simple_counts", "simple members of Av(2341,4123,3412) == closed form",
                range(4, n_max));
    const CountTable enumerated = enumerate_simples(three_basis, n_max, jobs);
    const CountTable closed = series_counts(simple_gf_closed(n_max), n_max, three_basis);
    compare_counts(check, enumerated, closed, 4, n_max);
    if (closed.at(4) != 2) check.fail("coefficient of x^4 is " + closed.at(4).get_str());
    return check.finish(listing(enumerated, 4, n_max));
}

CheckResult check_structural_counts(int n_max, int jobs) {
    Check check("structural_counts",
                "members of Av(2341,4123) meeting the structural conditions == simple members",
                range(3, n_max));
    const CountTable structural = structural_simple_counts(n_max, jobs);
    const CountTable enumerated = enumerate_simples(three_basis, n_max, jobs);
    compare_counts(check, structural, enumerated, 3, n_max);
    return check.finish(listing(structural, 3, n_max));
}

CheckResult check_sum_indecomposables(int n_max, int jobs) {
    Check check("sum_indecomposables", "sum indecomposable members == coefficients of g",
                range(1, n_max));
    CountTable enumerated = enumerate_class(two_basis, n_max, jobs, [](std::span<const int> m) {
        return !m.empty() &&
               sum_skew_status(Permutation::pattern_of(m)) != SumSkewStatus::sum_decomposable;
    });
    const CountTable series = series_counts(gf_g(n_max), n_max, two_basis);
    compare_counts(check, enumerated, series, 1, n_max);
    return check.finish(listing(enumerated, 1, n_max));
}

CheckResult check_catalan(int n_max) {
    Check check("catalan", "coefficients of c == |Av(123)_n|", range(1, n_max));
    const CountTable enumerated = enumerate_class({p123}, n_max);
    const CountTable series = series_counts(catalan_gf(n_max), n_max, {p123});
    compare_counts(check, enumerated, series, 1, n_max);
    if (series.at(0) != 0) check.fail("constant term");
    return check.finish(listing(enumerated, 1, n_max));
}

CheckResult check_summation(int order) {
    Check check("summation_vs_closed_form", "term-by-term summation == closed form",
                "order " + std::to_string(order));
    series_equal(check, simple_gf_summation(order), simple_gf_closed(order));
    return check.finish("compared through x^" + std::to_string(order));
}

CheckResult check_assembly(int order) {
    Check check("assembly_vs_explicit", "assembled g == explicit g", "order " + std::to_string(order));
    series_equal(check, gf_g(order), gf_g_explicit(order));
    return check.finish("compared through x^" + std::to_string(order));
}

CheckResult check_residual(int order, const QuadraticCoefficients& q) {
    Check check("quadratic_residual", "P2 f^2 + P1 f + P0 == 0", "order " + std::to_string(order));
    const PowerSeries r = quadratic_residual(gf_f(order), q);
    int nonzero = 0;
    for (int n = 0; n <= order; ++n) {
        if (r[n] != 0) {
            ++nonzero;
            check.fail("x^" + std::to_string(n) + ": " + r[n].get_str());
        }
    }
    return check.finish(nonzero == 0 ? "zero through x^" + std::to_string(order)
                                     : std::to_string(nonzero) + " nonzero coefficient(s)");
}

CheckResult check_growth_rate(int order, const QuadraticCoefficients& q) {
    Check check("growth_rate",
                "D(1/4) == 0 or least positive root of D within 1e-9 of 1/4; last five ratios in "
                "(3,4) and increasing",
                "ratios a_{n+1}/a_n for n <= " + std::to_string(order));
    const GrowthRateReport r = growth_rate_checks(q, order + 1);
    const Rational quarter(1, 4);
    const Rational tolerance(1, 1000000000);
    std::string actual = "D(1/4) = " + r.discriminant_at_quarter.get_str();
    bool root_ok = false;
    if (r.root_found) {
        const Rational& lo = r.least_positive_root.low;
        const Rational& hi = r.least_positive_root.high;
        root_ok = hi - lo < tolerance && abs(lo - quarter) < tolerance && abs(hi - quarter) < tolerance;
        actual += "; least positive root in [" + approx(lo) + ", " + approx(hi) + "]";
    } else {
        actual += "; no positive root";
    }
    if (!r.quarter_is_root && !root_ok) check.fail("growth rate is not 4");

    // Below this order the ratios are still in their initial dip.
    constexpr int ratio_order = 20;
    const std::size_t count = r.ratios.size();
    if (order < ratio_order) {
        actual += "; ratio trend not assessed below order " + std::to_string(ratio_order);
    } else {
        actual += "; ratios";
        for (std::size_t i = count - 5; i < count; ++i) {
            const Rational& ratio = r.ratios[i];
            actual += " " + approx(ratio);
            if (ratio <= 3 || ratio >= 4) check.fail("ratio " + std::to_string(i + 1) + " outside (3,4)");
            if (i > count - 5 && ratio <= r.ratios[i - 1]) {
                check.fail("ratio " + std::to_string(i + 1) + " does not increase");
            }
        }
    }
    return check.finish(actual);
}

// ---------------------------------------------------------------------------

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << "[" << c.status() << "] " << c.name << " (" << c.scope << "): " << c.actual << "\n";
        for (const std::string& d : c.details) out << "    " << d << "\n";
    }
    for (const std::string& n : notes) out << "note: " << n << "\n";
    const long passed = std::count_if(checks.begin(), checks.end(),
                                      [](const CheckResult& c) { return c.passed; });
    out << passed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

Report verify_all(int n_enum, int n_series, const VerifyOptions& options) {
    if (n_enum < 4) throw std::invalid_argument("verify_all: n_enum must be >= 4");
    if (n_series < n_enum) throw std::invalid_argument("verify_all: n_series must be >= n_enum");

    QuadraticCoefficients q = QuadraticCoefficients::published();
    if (options.corrupt_p0) q.p0 = q.p0 + Polynomial{1};

    // Exhaustive checks over all n! permutations are capped where they stop
    // being desk-scale.
    const int poset_max = std::min(n_enum, 8);
    const int theorem_max = std::min(n_enum, 9);
    const int juxtaposition_max = std::min(n_enum, 8);
    const int both_max = std::min(n_enum, 8);
    const int census_max = std::min(n_enum, 10);
    const int extremal_max = std::min(n_enum, 7);
    const int structural_max = std::min(n_enum, 10);
    const int catalan_max = std::min(n_enum, 10);

    Report report;
    report.checks.push_back(check_core_roundtrips(std::min(n_enum, 8), std::min(n_enum, 6),
                                                  std::min(n_enum, 6)));
    report.checks.push_back(check_poset_equivalence(poset_max));
    report.checks.push_back(check_theorem_equivalence(theorem_max));
    report.checks.push_back(check_juxtaposition(juxtaposition_max));
    report.checks.push_back(check_both_patterns(both_max));
    report.checks.push_back(check_parallel_census(census_max));
    report.checks.push_back(check_extremal_forms(extremal_max));
    report.checks.push_back(check_inflation_proposition(n_enum));
    report.checks.push_back(check_class_counts(n_enum, n_series, options.jobs));
    report.checks.push_back(check_simple_counts(n_enum, options.jobs));
    report.checks.push_back(check_structural_counts(structural_max, options.jobs));
    report.checks.push_back(check_sum_indecomposables(n_enum, options.jobs));
    report.checks.push_back(check_catalan(catalan_max));
    report.checks.push_back(check_summation(n_series));
    report.checks.push_back(check_assembly(n_series));
    report.checks.push_back(check_residual(n_series, q));
    report.checks.push_back(check_growth_rate(n_series, q));

    if (n_enum < 8) {
        report.notes.push_back("reduced coverage: exhaustive checks stop at n = " +
                               std::to_string(n_enum) + " (full runs use 8 to 12)");
    }
    if (n_series < 30) {
        report.notes.push_back("reduced coverage: series checks stop at order " +
                               std::to_string(n_series) + " (full runs use 30)");
    }
    if (options.corrupt_p0) report.notes.push_back("fault injection: P0 + 1");
    return report;
}

}  // namespace permclass
