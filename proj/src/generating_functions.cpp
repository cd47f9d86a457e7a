#include "permclass/generating_functions.hpp"

#include <stdexcept>

namespace permclass {

namespace {

PowerSeries poly(std::initializer_list<long> c, int order) {
    return PowerSeries::from_polynomial(Polynomial(c), order);
}

std::vector<PowerSeries> powers(const PowerSeries& s, int count) {
    std::vector<PowerSeries> out;
    out.push_back(PowerSeries::constant(1, s.order()));
    for (int i = 1; i <= count; ++i) out.push_back(out.back() * s);
    return out;
}

Polynomial poly_from_list(const std::vector<long>& ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace

PowerSeries catalan_gf(int order) {
    if (order < 1) throw std::invalid_argument("catalan_gf: order must be >= 1");
    const PowerSeries root = poly({1, -4}, order + 1).sqrt();
    const PowerSeries numerator = poly({1, -2}, order + 1) - root;
    return Rational(1, 2) * numerator.shifted_down();
}

PowerSeries d_series(int order) {
    return PowerSeries::variable(order) / poly({1, -1}, order);
}

Integer interlacing_choices(long m, long pairs) {
    if (m < 0 || pairs < 0) throw std::invalid_argument("interlacing_choices: negative argument");
    return binomial(m - pairs, pairs);
}

PowerSeries simple_gf_summation(int order) {
    if (order < 4) throw std::invalid_argument("simple_gf_summation: order must be >= 4");
    const PowerSeries x2 = poly({0, 0, 1}, order);
    const PowerSeries y = x2 / poly({1, 0, -1}, order);
    const std::vector<PowerSeries> y_pow = powers(y, order / 2);
    const std::vector<PowerSeries> z_pow = powers(poly({1, 1}, order), order);

    PowerSeries total(order);
    for (long n = 4; n <= order; ++n) {
        for (long k = 0; n + 2 * k <= order; ++k) {
            // (binomial weight, z exponent) for the three boundary cases.
            const std::pair<Integer, long> terms[] = {
                {binomial(n - k - 2, k - 2), n - k - 1},
                {2 * binomial(n - k - 2, k - 1), n - k - 2},
                {binomial(n - k - 2, k), n - k - 3},
            };
            PowerSeries inner(order);
            for (const auto& [weight, t] : terms) {
                if (weight == 0 || t < 0) continue;
                inner = inner + Rational(weight) * z_pow[t];
            }
            if (inner.is_zero()) continue;
            std::vector<Rational> xn(static_cast<std::size_t>(n) + 1);
            xn[n] = 1;
            total = total + inner * PowerSeries(order, std::move(xn)) * y_pow[k];
        }
    }
    return Rational(2) * total;
}

PowerSeries simple_gf_closed(int order) {
    const PowerSeries numerator = poly({0, 0, 0, 0, 2, 0, 2, 0, 0, 2}, order);
    const PowerSeries denominator = poly({1, 0, -1}, order) * poly({1, -2, 0, 1, -1}, order);
    return numerator / denominator;
}

PowerSeries gf_g(int order) {
    if (order < 1) throw std::invalid_argument("gf_g: order must be >= 1");
    const PowerSeries c = catalan_gf(order);
    const PowerSeries d = d_series(order);
    const std::vector<PowerSeries> dp = powers(d, 9);
    const PowerSeries one = PowerSeries::constant(1, order);

    const PowerSeries from_123 = c - dp[2];
    const PowerSeries type_iv = Rational(2) * (dp[4] + dp[6] + dp[9]) /
                                ((one - dp[2]) * (one - Rational(2) * d + dp[3] - dp[4]));
    const PowerSeries type_v = dp[7];
    const PowerSeries overlap = Rational(2) * dp[4] / (one - dp[2]);
    return from_123 + type_iv + type_v - overlap;
}

PowerSeries gf_g_explicit(int order) {
    const PowerSeries c = catalan_gf(order);
    const PowerSeries numerator =
        poly({0, 0, 1, -13, 74, -247, 539, -805, 834, -595, 283, -80, 8}, order);
    const PowerSeries one_minus_x = poly({1, -1}, order);
    const std::vector<PowerSeries> omx = powers(one_minus_x, 7);
    const PowerSeries denominator = omx[7] * poly({1, -2}, order) * poly({1, -6, 12, -9, 1}, order);
    return c - numerator / denominator;
}

PowerSeries gf_f(int order) {
    if (order == 0) return PowerSeries::constant(1, 0);
    return (PowerSeries::constant(1, order) - gf_g(order)).reciprocal();
}

// ---------------------------------------------------------------------------

const QuadraticCoefficients& QuadraticCoefficients::published() {
    static const QuadraticCoefficients q{
        poly_from_list({-1, 34, -548, 5578, -40293, 220007, -944215, 3269458, -9301917,
                        22029889, -43835832, 73761400, -105396633, 128169929, -132706667,
                        116833299, -87179343, 54839380, -28844031, 12533805, -4420385, 1231750,
                        -259931, 38648, -3524, 144}),
        poly_from_list({1, -34, 547, -5548, 39867, -216192, 920002, -3153464, 8865879,
                        -20710152, 40562377, -67025068, 93798415, -111372132, 112183057,
                        -95667058, 68785738, -41428652, 20701382, -8464162, 2775400, -708318,
                        134339, -17556, 1380, -48}),
        poly_from_list({0, 1, -30, 427, -3838, 24459, -117616, 443390, -1343826, 3331377,
                        -6835800, 11703343, -16800814, 20271017, -20556472, 17480077,
                        -12404442, 7290078, -3508914, 1361690, -416740, 97464, -16624, 1921,
                        -132, 4}),
    };
    return q;
}

PowerSeries quadratic_residual(const PowerSeries& f, const QuadraticCoefficients& q) {
    const int order = f.order();
    return PowerSeries::from_polynomial(q.p2, order) * f * f +
           PowerSeries::from_polynomial(q.p1, order) * f + PowerSeries::from_polynomial(q.p0, order);
}

PowerSeries quadratic_residual(int order) {
    return quadratic_residual(gf_f(order), QuadraticCoefficients::published());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    const Polynomial squarefree = Polynomial::divmod(p, Polynomial::gcd(p, p.derivative())).first;
    std::vector<Polynomial> seq{squarefree, squarefree.derivative()};
    while (!seq.back().is_zero()) {
        const Polynomial r = Polynomial::divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const Polynomial& q : seq) {
        const int s = sgn(q.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const Polynomial& p, const Rational& low, const Rational& high) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    const std::vector<Polynomial> seq = sturm_sequence(p);
    return sign_changes(seq, low) - sign_changes(seq, high);
}

bool isolate_least_positive_root(const Polynomial& p, const Rational& width, RootInterval& out) {
    if (p.is_zero()) throw std::invalid_argument("isolate_least_positive_root: zero polynomial");
    if (p.degree() == 0) return false;
    // Cauchy bound on the magnitude of every root.
    const auto& c = p.coefficients();
    Rational bound = 0;
    for (int i = 0; i < p.degree(); ++i) {
        const Rational ratio = abs(c[i] / c.back());
        if (ratio > bound) bound = ratio;
    }
    bound += 1;

    const std::vector<Polynomial> seq = sturm_sequence(p);
    const int at_zero = sign_changes(seq, 0);
    if (at_zero - sign_changes(seq, bound) == 0) return false;
    Rational low = 0;
    Rational high = bound;
    while (high - low >= width) {
        const Rational mid = (low + high) / 2;
        if (at_zero - sign_changes(seq, mid) > 0) {
            high = mid;
        } else {
            low = mid;
        }
    }
    out = {low, high};
    return true;
}

GrowthRateReport growth_rate_checks(const QuadraticCoefficients& q, int order) {
    GrowthRateReport report;
    const Polynomial disc = q.discriminant();
    report.discriminant_at_quarter = disc.evaluate(Rational(1, 4));
    report.quarter_is_root = report.discriminant_at_quarter == 0;
    report.root_found =
        isolate_least_positive_root(disc, Rational(1, 1000000000) / 10, report.least_positive_root);

    const PowerSeries f = gf_f(order);
    for (int n = 1; n < order; ++n) report.ratios.push_back(f[n + 1] / f[n]);
    return report;
}

GrowthRateReport growth_rate_checks(int order) {
    return growth_rate_checks(QuadraticCoefficients::published(), order);
}

PowerSeries named_series(const std::string& which, int order) {
    if (which == "c") return catalan_gf(order);
    if (which == "d") return d_series(order);
    if (which == "g") return gf_g(order);
    if (which == "f") return gf_f(order);
    if (which == "simple-closed") return simple_gf_closed(order);
    if (which == "simple-sum") return simple_gf_summation(order);
    throw std::invalid_argument("unknown series '" + which + "'");
}

}  // namespace permclass
