#include <polybern/polybernoulli.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include <polybern/combinatorics.hpp>

namespace polybern
{

rational_polynomial::rational_polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    while (!m_coeffs.empty() && m_coeffs.back() == 0) {
        m_coeffs.pop_back();
    }
}

Rational rational_polynomial::coeff(std::size_t k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : Rational(0);
}

Rational rational_polynomial::operator()(const Rational &x) const
{
    Rational r(0);
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

namespace
{

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_values{Rational(1)};

enum class flavor { at_integer, C };

using value_key = std::tuple<flavor, std::size_t, long, std::size_t>;

std::mutex value_mutex;
std::map<value_key, Rational> value_cache;

template <typename Compute>
Rational cached(const value_key &key, Compute &&compute)
{
    {
        std::lock_guard lock(value_mutex);
        if (auto it = value_cache.find(key); it != value_cache.end()) {
            return it->second;
        }
    }
    Rational v = compute();
    std::lock_guard lock(value_mutex);
    value_cache.emplace(key, v);
    return v;
}

// Sign (-1)^e for e of either sign.
inline bool odd(long e)
{
    return (e % 2) != 0;
}

} // namespace

Rational bernoulli(std::size_t n)
{
    std::lock_guard lock(bernoulli_mutex);
    auto &b = bernoulli_values;
    while (b.size() <= n) {
        // sum_{j=0}^{m-1} C(m, j) B_j = 0 with m = size + 1 solves for B_{m-1}.
        const std::size_t m = b.size() + 1;
        Rational acc(0);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            acc += Rational(binomial(m, j)) * b[j];
        }
        b.push_back(-acc / Rational(binomial(m, m - 1)));
    }
    return b[n];
}

Integer genocchi(std::size_t n)
{
    const Rational g = Rational(2 - ipow(Integer(2), n + 1)) * bernoulli(n);
    // G_n is always an integer.
    return g.get_num();
}

Rational poly_bernoulli_at_integer(std::size_t m, long k, std::size_t n)
{
    return cached({flavor::at_integer, m, k, n}, [&]() -> Rational {
        if (k <= 0) {
            const auto e = static_cast<std::size_t>(-k);
            Integer sum(0);
            for (std::size_t q = 1; q <= m + 1; ++q) {
                const Integer weight = factorial(q - 1) * ipow(Integer(static_cast<unsigned long>(q)), e);
                for (std::size_t i = 0; i <= n; ++i) {
                    const Integer term = weight * stirling_first(n, i) * stirling_second(m + i, n + q - 1);
                    if (odd(static_cast<long>(m + n + q - i - 1))) {
                        sum -= term;
                    } else {
                        sum += term;
                    }
                }
            }
            return Rational(sum);
        }
        Rational sum(0);
        for (std::size_t q = 1; q <= m + 1; ++q) {
            const Rational weight = Rational(factorial(q - 1)) * rpow(Rational(static_cast<unsigned long>(q)), -k);
            for (std::size_t i = 0; i <= n; ++i) {
                const Rational term = weight * Rational(stirling_first(n, i) * stirling_second(m + i, n + q - 1));
                if (odd(static_cast<long>(m + n + q - i - 1))) {
                    sum -= term;
                } else {
                    sum += term;
                }
            }
        }
        return sum;
    });
}

Rational poly_bernoulli_B(std::size_t n, long k)
{
    return poly_bernoulli_at_integer(n, k, 0);
}

rational_polynomial poly_bernoulli_polynomial(std::size_t n, long k)
{
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t e = 0; e <= n; ++e) {
        const std::size_t j = n - e;
        Rational c = Rational(binomial(n, j)) * poly_bernoulli_B(j, k);
        coeffs[e] = (e % 2 == 0) ? c : Rational(-c);
    }
    return rational_polynomial(std::move(coeffs));
}

Rational poly_bernoulli_C(std::size_t n, long k)
{
    return cached({flavor::C, n, k, 1}, [&] { return poly_bernoulli_polynomial(n, k)(Rational(1)); });
}

Rational script_B_def(std::size_t m, std::size_t l, std::size_t n)
{
    Rational sum(0);
    for (std::size_t j = 0; j <= n; ++j) {
        const long k = -static_cast<long>(l + j);
        sum += Rational(stirling_first(n, j)) * poly_bernoulli_at_integer(m, k, n);
    }
    return sum;
}

Integer script_B_closed(std::size_t m, std::size_t l, std::size_t n)
{
    const Integer nf = factorial(n);
    Integer sum(0);
    for (std::size_t j = 0; j <= std::min(l, m); ++j) {
        const Integer jf = factorial(j);
        sum += nf * jf * jf * binomial(j + n, n) * stirling_second(l + 1, j + 1) * stirling_second(m + 1, j + 1);
    }
    return sum;
}

// ------------------------------------------------------- generating functions

namespace
{

series1 exp_t(std::size_t order, const Rational &scale = Rational(1))
{
    return exp_series(series1::monomial(order, 1, scale));
}

} // namespace

series1 bernoulli_egf_series(std::size_t order)
{
    // t / (e^t - 1) = 1 / ((e^t - 1) / t)
    const series1 em1 = exp_t(order + 1) - series1::one(order + 1);
    return inverse(divide_by_variable(em1));
}

series1 genocchi_egf_series(std::size_t order)
{
    const series1 ep1 = exp_t(order) + series1::one(order);
    return series1::monomial(order, 1, Rational(2)) * inverse(ep1);
}

series1 poly_bernoulli_B_egf_series(long k, std::size_t order)
{
    // Both Li_k(z) and z = 1 - e^{-t} vanish at t = 0; divide each by t first.
    const series1 z = series1::one(order + 1) - exp_t(order + 1, Rational(-1));
    const series1 li = polylog_substitute(k, z);
    return divide_by_variable(li) * inverse(divide_by_variable(z));
}

series1 poly_bernoulli_C_egf_series(long k, std::size_t order)
{
    const series1 z = series1::one(order + 1) - exp_t(order + 1, Rational(-1));
    const series1 em1 = exp_t(order + 1) - series1::one(order + 1);
    const series1 li = polylog_substitute(k, z);
    return divide_by_variable(li) * inverse(divide_by_variable(em1));
}

series1 poly_bernoulli_polynomial_egf_series(long k, const Rational &x, std::size_t order)
{
    return exp_t(order, -x) * poly_bernoulli_B_egf_series(k, order);
}

series2 script_B_egf_series(std::size_t n, std::size_t order)
{
    const series1 et = exp_t(order);
    const series2 ex = series2::in_x(et);
    const series2 ey = series2::in_y(et);
    const series2 exy = ex * ey;
    const series2 d = ex + ey - exy;
    return Rational(factorial(n)) * exy * power(d, -static_cast<long>(n + 1));
}

Rational bernoulli_via_series(std::size_t n)
{
    return egf_coefficient(bernoulli_egf_series(n), n);
}

Integer genocchi_via_series(std::size_t n)
{
    const Rational g = egf_coefficient(genocchi_egf_series(n), n);
    if (!is_integer(g)) {
        throw domain_error("Genocchi coefficient is not integral: " + to_string(g));
    }
    return g.get_num();
}

Rational poly_bernoulli_B_via_series(std::size_t n, long k)
{
    return egf_coefficient(poly_bernoulli_B_egf_series(k, n), n);
}

Rational poly_bernoulli_C_via_series(std::size_t n, long k)
{
    return egf_coefficient(poly_bernoulli_C_egf_series(k, n), n);
}

} // namespace polybern
