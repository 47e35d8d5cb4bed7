#include <polybern/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace polybern
{

// ---------------------------------------------------------------- series1

series1::series1(std::size_t order) : m_coeffs(order + 1) {}

series1::series1(std::size_t order, std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    m_coeffs.resize(order + 1);
}

series1 series1::one(std::size_t order)
{
    return monomial(order, 0);
}

series1 series1::variable(std::size_t order)
{
    return monomial(order, 1);
}

series1 series1::monomial(std::size_t order, std::size_t exponent, const Rational &c)
{
    series1 s(order);
    if (exponent <= order) {
        s[exponent] = c;
    }
    return s;
}

Rational series1::coeff_or_zero(std::size_t k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : Rational(0);
}

std::size_t series1::valuation() const
{
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        if (m_coeffs[k] != 0) {
            return k;
        }
    }
    return m_coeffs.size();
}

bool series1::is_zero() const
{
    return valuation() == m_coeffs.size();
}

series1 series1::truncate(std::size_t order) const
{
    return series1(std::min(order, this->order()), m_coeffs);
}

series1 &series1::operator+=(const series1 &other)
{
    m_coeffs.resize(std::min(m_coeffs.size(), other.m_coeffs.size()));
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        m_coeffs[k] += other.m_coeffs[k];
    }
    return *this;
}

series1 &series1::operator-=(const series1 &other)
{
    m_coeffs.resize(std::min(m_coeffs.size(), other.m_coeffs.size()));
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        m_coeffs[k] -= other.m_coeffs[k];
    }
    return *this;
}

series1 &series1::operator*=(const series1 &other)
{
    *this = *this * other;
    return *this;
}

series1 &series1::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

series1 operator*(const series1 &a, const series1 &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    series1 r(n);
    Rational t;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) {
                continue;
            }
            t = a[i] * b[j];
            r[i + j] += t;
        }
    }
    return r;
}

series1 operator-(series1 a)
{
    for (auto &x : a.m_coeffs) {
        x = -x;
    }
    return a;
}

// ---------------------------------------------------------------- series2

series2::series2(std::size_t order) : m_order(order), m_coeffs((order + 1) * (order + 2) / 2) {}

series2 series2::one(std::size_t order)
{
    series2 s(order);
    s(0, 0) = 1;
    return s;
}

series2 series2::variable_x(std::size_t order)
{
    series2 s(order);
    if (order >= 1) {
        s(1, 0) = 1;
    }
    return s;
}

series2 series2::variable_y(std::size_t order)
{
    series2 s(order);
    if (order >= 1) {
        s(0, 1) = 1;
    }
    return s;
}

series2 series2::in_x(const series1 &s)
{
    series2 r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        r(i, 0) = s[i];
    }
    return r;
}

series2 series2::in_y(const series1 &s)
{
    series2 r(s.order());
    for (std::size_t j = 0; j <= s.order(); ++j) {
        r(0, j) = s[j];
    }
    return r;
}

bool series2::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &q) { return q == 0; });
}

series2 series2::truncate(std::size_t order) const
{
    const std::size_t n = std::min(order, m_order);
    series2 r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            r(i, j) = (*this)(i, j);
        }
    }
    return r;
}

series2 &series2::operator+=(const series2 &other)
{
    if (other.m_order < m_order) {
        *this = truncate(other.m_order);
    }
    for (std::size_t i = 0; i <= m_order; ++i) {
        for (std::size_t j = 0; i + j <= m_order; ++j) {
            (*this)(i, j) += other(i, j);
        }
    }
    return *this;
}

series2 &series2::operator-=(const series2 &other)
{
    if (other.m_order < m_order) {
        *this = truncate(other.m_order);
    }
    for (std::size_t i = 0; i <= m_order; ++i) {
        for (std::size_t j = 0; i + j <= m_order; ++j) {
            (*this)(i, j) -= other(i, j);
        }
    }
    return *this;
}

series2 &series2::operator*=(const series2 &other)
{
    *this = *this * other;
    return *this;
}

series2 &series2::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

series2 operator*(const series2 &a, const series2 &b)
{
    const std::size_t n = std::min(a.order(), b.order());
    series2 r(n);
    Rational t;
    for (std::size_t i1 = 0; i1 <= n; ++i1) {
        for (std::size_t j1 = 0; i1 + j1 <= n; ++j1) {
            const Rational &x = a(i1, j1);
            if (x == 0) {
                continue;
            }
            const std::size_t rest = n - i1 - j1;
            for (std::size_t i2 = 0; i2 <= rest; ++i2) {
                for (std::size_t j2 = 0; i2 + j2 <= rest; ++j2) {
                    const Rational &y = b(i2, j2);
                    if (y == 0) {
                        continue;
                    }
                    t = x * y;
                    r(i1 + i2, j1 + j2) += t;
                }
            }
        }
    }
    return r;
}

series2 operator-(series2 a)
{
    for (auto &x : a.m_coeffs) {
        x = -x;
    }
    return a;
}

// ---------------------------------------------------------------- algorithms

series1 exp_series(const series1 &a)
{
    if (a[0] != 0) {
        throw domain_error("exp_series: argument has nonzero constant term " + to_string(a[0]));
    }
    // f' = a' f  =>  n f_n = sum_{k=1}^{n} k a_k f_{n-k}
    const std::size_t n = a.order();
    series1 f(n);
    f[0] = 1;
    Rational acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k] != 0) {
                acc += a[k] * f[m - k] * static_cast<unsigned long>(k);
            }
        }
        f[m] = acc / static_cast<unsigned long>(m);
    }
    return f;
}

series2 exp_series(const series2 &a)
{
    if (a(0, 0) != 0) {
        throw domain_error("exp_series: argument has nonzero constant term " + to_string(a(0, 0)));
    }
    // a^i has total valuation >= i, so the Taylor sum stops at i = N.
    const std::size_t n = a.order();
    series2 result = series2::one(n);
    series2 term = series2::one(n);
    for (std::size_t i = 1; i <= n; ++i) {
        term *= a;
        term *= Rational(1, static_cast<unsigned long>(i));
        result += term;
    }
    return result;
}

series1 inverse(const series1 &a)
{
    if (a[0] == 0) {
        throw domain_error("inverse: series has zero constant term");
    }
    const std::size_t n = a.order();
    const Rational c0 = 1 / a[0];
    series1 b(n);
    b[0] = c0;
    Rational acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k] != 0) {
                acc += a[k] * b[m - k];
            }
        }
        b[m] = -acc * c0;
    }
    return b;
}

series2 inverse(const series2 &a)
{
    if (a(0, 0) == 0) {
        throw domain_error("inverse: series has zero constant term");
    }
    const std::size_t n = a.order();
    const Rational c0 = 1 / a(0, 0);
    series2 b(n);
    b(0, 0) = c0;
    Rational acc;
    // Fill by increasing total degree; each entry only needs lower degrees.
    for (std::size_t d = 1; d <= n; ++d) {
        for (std::size_t i = 0; i <= d; ++i) {
            const std::size_t j = d - i;
            acc = 0;
            for (std::size_t p = 0; p <= i; ++p) {
                for (std::size_t q = 0; q <= j; ++q) {
                    if ((p == 0 && q == 0) || a(p, q) == 0) {
                        continue;
                    }
                    acc += a(p, q) * b(i - p, j - q);
                }
            }
            b(i, j) = -acc * c0;
        }
    }
    return b;
}

namespace
{

template <typename Series>
Series power_impl(const Series &a, long e)
{
    if (e < 0) {
        return power_impl(inverse(a), -e);
    }
    Series result = Series::one(a.order());
    Series base = a;
    auto u = static_cast<unsigned long>(e);
    while (u != 0) {
        if (u & 1u) {
            result *= base;
        }
        u >>= 1;
        if (u != 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace

series1 power(const series1 &a, long e)
{
    return power_impl(a, e);
}

series2 power(const series2 &a, long e)
{
    return power_impl(a, e);
}

series1 compose(const series1 &outer, const series1 &inner)
{
    if (inner[0] != 0) {
        throw domain_error("compose: inner series has nonzero constant term " + to_string(inner[0]));
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const series1 in = inner.truncate(n);
    series1 result = series1::monomial(n, 0, outer[n]);
    for (std::size_t k = n; k-- > 0;) {
        result *= in;
        result[0] += outer[k];
    }
    return result;
}

series1 mobius_substitution(const series1 &a, const Rational &c)
{
    const std::size_t n = a.order();
    series1 inner(n);
    Rational cp(1);
    for (std::size_t j = 1; j <= n; ++j) {
        inner[j] = cp;
        cp *= c;
    }
    return compose(a, inner);
}

series1 scale_argument(const series1 &a, const Rational &c)
{
    series1 r = a;
    Rational cp(1);
    for (std::size_t k = 0; k <= r.order(); ++k) {
        r[k] *= cp;
        cp *= c;
    }
    return r;
}

namespace
{

// 1 / m^k as an exact rational, k of either sign.
Rational inverse_power(unsigned long m, long k)
{
    return rpow(Rational(m), -k);
}

template <typename Series>
Series polylog_impl(long k, const Series &inner)
{
    const std::size_t n = inner.order();
    Series result(n);
    Series p = inner;
    for (std::size_t m = 1; m <= n; ++m) {
        result += p * inverse_power(static_cast<unsigned long>(m), k);
        if (m < n) {
            p *= inner;
        }
    }
    return result;
}

} // namespace

series1 polylog_substitute(long k, const series1 &inner)
{
    if (inner[0] != 0) {
        throw domain_error("polylog_substitute: inner series has nonzero constant term " + to_string(inner[0]));
    }
    return polylog_impl(k, inner);
}

series2 polylog_substitute(long k, const series2 &inner)
{
    if (inner(0, 0) != 0) {
        throw domain_error("polylog_substitute: inner series has nonzero constant term " + to_string(inner(0, 0)));
    }
    return polylog_impl(k, inner);
}

series1 derivative(const series1 &a)
{
    const std::size_t n = a.order() == 0 ? 0 : a.order() - 1;
    series1 r(n);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        r[k - 1] = a[k] * static_cast<unsigned long>(k);
    }
    return r;
}

series2 derivative(const series2 &a, var v)
{
    const std::size_t n = a.order() == 0 ? 0 : a.order() - 1;
    series2 r(n);
    if (a.order() == 0) {
        return r;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (v == var::x) {
                r(i, j) = a(i + 1, j) * static_cast<unsigned long>(i + 1);
            } else {
                r(i, j) = a(i, j + 1) * static_cast<unsigned long>(j + 1);
            }
        }
    }
    return r;
}

series1 integral(const series1 &a)
{
    series1 r(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        r[k] = a[k - 1] / static_cast<unsigned long>(k);
    }
    return r;
}

series1 divide_by_variable(const series1 &a)
{
    if (a[0] != 0) {
        throw domain_error("divide_by_variable: series has nonzero constant term " + to_string(a[0]));
    }
    const std::size_t n = a.order() == 0 ? 0 : a.order() - 1;
    series1 r(n);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        r[k - 1] = a[k];
    }
    return r;
}

Rational egf_coefficient(const series1 &a, std::size_t n)
{
    if (n > a.order()) {
        throw std::out_of_range("egf_coefficient: exponent " + std::to_string(n) + " exceeds truncation order "
                                + std::to_string(a.order()));
    }
    return a[n] * factorial(n);
}

Rational egf_coefficient(const series2 &a, std::size_t i, std::size_t j)
{
    if (i + j > a.order()) {
        throw std::out_of_range("egf_coefficient: total degree " + std::to_string(i + j)
                                + " exceeds truncation order " + std::to_string(a.order()));
    }
    return a(i, j) * factorial(i) * factorial(j);
}

} // namespace polybern
