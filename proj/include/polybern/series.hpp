#ifndef POLYBERN_SERIES_HPP
#define POLYBERN_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <polybern/rational.hpp>

namespace polybern
{

// Default truncation order used by the CLI and the verification defaults.
inline constexpr std::size_t default_order = 32;

// Truncated univariate power series sum_{k=0}^{N} c_k x^k over the rationals.
// Every kept coefficient is exact; exponents above the order are dropped.
// Binary operations on operands of different orders truncate to the smaller.
class series1
{
public:
    series1() : series1(0) {}
    explicit series1(std::size_t order);
    // Coefficients beyond the order are discarded, missing ones are zero.
    series1(std::size_t order, std::vector<Rational> coeffs);

    static series1 one(std::size_t order);
    static series1 variable(std::size_t order);
    static series1 monomial(std::size_t order, std::size_t exponent, const Rational &c = Rational(1));

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }

    const Rational &operator[](std::size_t k) const
    {
        return m_coeffs[k];
    }
    Rational &operator[](std::size_t k)
    {
        return m_coeffs[k];
    }
    // Zero for k beyond the order.
    Rational coeff_or_zero(std::size_t k) const;

    std::span<const Rational> coeffs() const noexcept
    {
        return m_coeffs;
    }

    // Lowest exponent with a nonzero coefficient; order() + 1 for the zero series.
    std::size_t valuation() const;
    bool is_zero() const;

    series1 truncate(std::size_t order) const;

    series1 &operator+=(const series1 &other);
    series1 &operator-=(const series1 &other);
    series1 &operator*=(const series1 &other);
    series1 &operator*=(const Rational &c);

    friend series1 operator+(series1 a, const series1 &b)
    {
        return a += b;
    }
    friend series1 operator-(series1 a, const series1 &b)
    {
        return a -= b;
    }
    friend series1 operator*(const series1 &a, const series1 &b);
    friend series1 operator*(series1 a, const Rational &c)
    {
        return a *= c;
    }
    friend series1 operator*(const Rational &c, series1 a)
    {
        return a *= c;
    }
    friend series1 operator-(series1 a);

    friend bool operator==(const series1 &, const series1 &) = default;

private:
    std::vector<Rational> m_coeffs;
};

enum class var { x, y };

// Truncated bivariate power series sum_{i+j<=N} c_{ij} x^i y^j, truncated by
// total degree. Storage is a dense triangle, row i holding j = 0..N-i.
class series2
{
public:
    series2() : series2(0) {}
    explicit series2(std::size_t order);

    static series2 one(std::size_t order);
    static series2 variable_x(std::size_t order);
    static series2 variable_y(std::size_t order);
    // Embeds a univariate series as a series in x alone (resp. y alone).
    static series2 in_x(const series1 &s);
    static series2 in_y(const series1 &s);

    std::size_t order() const noexcept
    {
        return m_order;
    }

    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        return m_coeffs[index(i, j)];
    }
    Rational &operator()(std::size_t i, std::size_t j)
    {
        return m_coeffs[index(i, j)];
    }

    bool is_zero() const;

    series2 truncate(std::size_t order) const;

    series2 &operator+=(const series2 &other);
    series2 &operator-=(const series2 &other);
    series2 &operator*=(const series2 &other);
    series2 &operator*=(const Rational &c);

    friend series2 operator+(series2 a, const series2 &b)
    {
        return a += b;
    }
    friend series2 operator-(series2 a, const series2 &b)
    {
        return a -= b;
    }
    friend series2 operator*(const series2 &a, const series2 &b);
    friend series2 operator*(series2 a, const Rational &c)
    {
        return a *= c;
    }
    friend series2 operator*(const Rational &c, series2 a)
    {
        return a *= c;
    }
    friend series2 operator-(series2 a);

    friend bool operator==(const series2 &, const series2 &) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept
    {
        // Rows 0..i-1 hold (N+1) + N + ... + (N-i+2) entries.
        return i * (m_order + 1) - i * (i - 1) / 2 + j;
    }

    std::size_t m_order;
    std::vector<Rational> m_coeffs;
};

// exp(a); a must have zero constant term.
series1 exp_series(const series1 &a);
series2 exp_series(const series2 &a);

// Multiplicative inverse; the constant term must be nonzero.
series1 inverse(const series1 &a);
series2 inverse(const series2 &a);

// a^e by repeated squaring; negative exponents go through inverse().
series1 power(const series1 &a, long e);
series2 power(const series2 &a, long e);

// outer(inner(x)); inner must have zero constant term.
series1 compose(const series1 &outer, const series1 &inner);

// a(x / (1 - c x)).
series1 mobius_substitution(const series1 &a, const Rational &c);

// a(c x).
series1 scale_argument(const series1 &a, const Rational &c);

// Li_k(inner) = sum_{m>=1} inner^m / m^k, for any integer k. Only
// m <= order contributes because inner has zero constant term.
series1 polylog_substitute(long k, const series1 &inner);
series2 polylog_substitute(long k, const series2 &inner);

// Formal derivative; the result has order one less (order 0 stays order 0).
series1 derivative(const series1 &a);
series2 derivative(const series2 &a, var v);

// Formal antiderivative with zero constant term, truncated at a.order().
series1 integral(const series1 &a);

// a / x for a series with zero constant term; the order drops by one.
series1 divide_by_variable(const series1 &a);

// Coefficient times n! (resp. i! j!). Throws std::out_of_range beyond the order.
Rational egf_coefficient(const series1 &a, std::size_t n);
Rational egf_coefficient(const series2 &a, std::size_t i, std::size_t j);

} // namespace polybern

#endif
