#include "permclass/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permclass {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(Rational coefficient, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[i];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PowerSeries Polynomial::evaluate(const PowerSeries& x) const {
    PowerSeries acc(x.order());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + PowerSeries::constant(*it, x.order());
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs_);
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {Polynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
    for (int i = dq; i >= 0; --i) {
        const Rational factor = rem[i + db] / b.coeffs_[db];
        quot[i] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] -= factor * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rational lead = a.coeffs_.back();
    return (1 / lead) * a;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        const Rational mag = abs(c);
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i > 0) out << "x";
        if (i > 1) out << "^" << i;
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coefficients) : PowerSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) {
        coeffs_[i] = std::move(coefficients[i]);
    }
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
    return PowerSeries(order, p.coefficients());
}

const Rational& PowerSeries::operator[](int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[i];
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
    return PowerSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::shifted_down() const {
    if (coeffs_[0] != 0) throw std::domain_error("shifted_down: nonzero constant term");
    if (order() == 0) throw std::domain_error("shifted_down: nothing left after the shift");
    return PowerSeries(order() - 1, std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw std::domain_error("reciprocal: zero constant term");
    const int n = order();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    const Rational inv0 = 1 / coeffs_[0];
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r[k - j];
        r[k] = -acc * inv0;
    }
    return PowerSeries(n, std::move(r));
}

PowerSeries PowerSeries::sqrt() const {
    if (coeffs_[0] != 1) throw std::domain_error("sqrt: constant term must be 1");
    // Newton step r <- (r + s / r) / 2, doubling the correct prefix each time.
    const Rational half(1, 2);
    PowerSeries r = constant(1, 0);
    int known = 0;
    while (known < order()) {
        known = std::min(order(), 2 * known + 1);
        PowerSeries wide(known, r.coeffs_);
        const PowerSeries target = truncated(known);
        r = half * (wide + target / wide);
    }
    return PowerSeries(order(), r.coeffs_);
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries out(*this);
    for (auto& v : out.coeffs_) v = -v;
    return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    const int n = out.order();
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.reciprocal(); }

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
    PowerSeries out(a);
    for (auto& v : out.coeffs_) v *= s;
    return out;
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& v) { return v == 0; });
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace permclass
