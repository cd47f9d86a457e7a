#pragma once

#include <string>
#include <vector>

#include "permclass/series.hpp"

namespace permclass {

/// (1 - 2x - sqrt(1 - 4x)) / (2x): non-empty 123-avoiders. Requires order >= 1.
PowerSeries catalan_gf(int order);

/// d = x / (1 - x).
PowerSeries d_series(int order);

/// Ways to pick `pairs` disjoint adjacent pairs (i, i+1) from {1..m}.
Integer interlacing_choices(long m, long pairs);

/// Simple members of Av(2341, 4123, 3412), summed term by term over the
/// number of extrema and of interlacing corner pairs. Requires order >= 4.
PowerSeries simple_gf_summation(int order);

/// 2(x^4 + x^6 + x^9) / ((1 - x^2)(1 - 2x + x^3 - x^4)).
PowerSeries simple_gf_closed(int order);

/// Sum indecomposable members of Av(2341, 4123), assembled from the five
/// families (123-avoiders, the 3412-free simples, 5274163) with d in place of
/// x. Requires order >= 1.
PowerSeries gf_g(int order);

/// The same series written as the Catalan term minus one rational function.
PowerSeries gf_g_explicit(int order);

/// 1 / (1 - g): the whole class Av(2341, 4123).
PowerSeries gf_f(int order);

/// Coefficients of the quadratic relation P2 f^2 + P1 f + P0 = 0.
struct QuadraticCoefficients {
    Polynomial p2;
    Polynomial p1;
    Polynomial p0;

    static const QuadraticCoefficients& published();
    Polynomial discriminant() const { return p1 * p1 - Rational(4) * (p2 * p0); }
};

PowerSeries quadratic_residual(const PowerSeries& f, const QuadraticCoefficients& q);
PowerSeries quadratic_residual(int order);

struct RootInterval {
    Rational low;
    Rational high;
};

struct GrowthRateReport {
    Rational discriminant_at_quarter;
    bool quarter_is_root = false;
    bool root_found = false;
    /// Isolates the least positive root of the discriminant.
    RootInterval least_positive_root;
    /// ratios[i] = a_{i+2} / a_{i+1} for f's coefficients, i.e. starting at n = 1.
    std::vector<Rational> ratios;
};

/// Counts the distinct real roots of p in the half-open interval (low, high].
int count_real_roots(const Polynomial& p, const Rational& low, const Rational& high);

/// Least positive root of p, bisected until the interval is narrower than
/// `width`. Returns false when p has no positive root.
bool isolate_least_positive_root(const Polynomial& p, const Rational& width, RootInterval& out);

GrowthRateReport growth_rate_checks(const QuadraticCoefficients& q, int order);
GrowthRateReport growth_rate_checks(int order = 30);

/// Which series the CLI can print.
PowerSeries named_series(const std::string& which, int order);

}  // namespace permclass
