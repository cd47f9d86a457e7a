#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace permclass {

using Integer = mpz_class;
using Rational = mpq_class;

class PowerSeries;

/// Dense polynomial with exact rational coefficients. The coefficient vector
/// never has trailing zeros, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial monomial(Rational coefficient, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;
    PowerSeries evaluate(const PowerSeries& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; throws std::domain_error for a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic greatest common divisor (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Formal power series known through x^order. Binary operations truncate to
/// the smaller order of their operands.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    PowerSeries(int order, std::vector<Rational> coefficients);

    static PowerSeries constant(const Rational& c, int order);
    /// The series x.
    static PowerSeries variable(int order);
    static PowerSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Throws std::out_of_range beyond the truncation order.
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;
    /// Divides by x; the constant term must be zero. The order drops by one.
    PowerSeries shifted_down() const;

    /// Throws std::domain_error when the constant term is zero.
    PowerSeries reciprocal() const;
    /// Throws std::domain_error unless the constant term is 1.
    PowerSeries sqrt() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

    bool is_zero() const;

private:
    std::vector<Rational> coeffs_;
};

/// Binomial coefficient with value 0 when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace permclass
