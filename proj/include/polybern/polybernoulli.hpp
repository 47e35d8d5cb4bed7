#ifndef POLYBERN_POLYBERNOULLI_HPP
#define POLYBERN_POLYBERNOULLI_HPP

#include <cstddef>
#include <vector>

#include <polybern/rational.hpp>
#include <polybern/series.hpp>

namespace polybern
{

// Dense univariate polynomial over the rationals, index = exponent.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class rational_polynomial
{
public:
    rational_polynomial() = default;
    explicit rational_polynomial(std::vector<Rational> coeffs);

    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }

    // Zero beyond the degree.
    Rational coeff(std::size_t k) const;

    const std::vector<Rational> &coeffs() const noexcept
    {
        return m_coeffs;
    }

    Rational operator()(const Rational &x) const;

    friend bool operator==(const rational_polynomial &, const rational_polynomial &) = default;

private:
    std::vector<Rational> m_coeffs;
};

// Bernoulli numbers with B_1 = -1/2 (generating function t/(e^t - 1)),
// computed by sum_{j=0}^{m-1} C(m, j) B_j = 0 and memoized.
Rational bernoulli(std::size_t n);

// Genocchi numbers G_n = (2 - 2^{n+1}) B_n, generating function 2t/(e^t + 1).
Integer genocchi(std::size_t n);

// Poly-Bernoulli numbers of both flavours:
//   Li_k(1 - e^{-t}) / (1 - e^{-t}) = sum B_n^(k) t^n / n!
//   Li_k(1 - e^{-t}) / (e^t - 1)    = sum C_n^(k) t^n / n!
// B is taken from the Stirling double sum at argument 0, C from the
// polynomial evaluated at 1. Values are memoized per (flavour, n, k).
Rational poly_bernoulli_B(std::size_t n, long k);
Rational poly_bernoulli_C(std::size_t n, long k);

// B_n^(k)(x) = sum_{j=0}^{n} (-1)^{n-j} C(n, j) B_j^(k) x^{n-j}.
rational_polynomial poly_bernoulli_polynomial(std::size_t n, long k);

// B_m^(k)(n) through the double Stirling sum
//   sum_{q=1}^{m+1} sum_{i=0}^{n} (-1)^{m+n+q-i-1} (q-1)!/q^k [n, i] {m+i, n+q-1}.
// For k <= 0 the weight (q-1)! q^{-k} is an integer and the sum stays in Z.
Rational poly_bernoulli_at_integer(std::size_t m, long k, std::size_t n);

// The generalized sum sum_{j=0}^{n} [n, j] B_m^(-l-j)(n), straight from its
// definition. Used for verification; script_B_closed is the fast route.
Rational script_B_def(std::size_t m, std::size_t l, std::size_t n);

// Cancellation-free closed form of the same quantity:
//   sum_{j=0}^{min(l,m)} n! (j!)^2 C(j+n, n) {l+1, j+1} {m+1, j+1}.
Integer script_B_closed(std::size_t m, std::size_t l, std::size_t n);

// --- generating-function routes -------------------------------------------

// t / (e^t - 1) up to t^order.
series1 bernoulli_egf_series(std::size_t order);
// 2t / (e^t + 1) up to t^order.
series1 genocchi_egf_series(std::size_t order);
// Li_k(1 - e^{-t}) / (1 - e^{-t}) up to t^order.
series1 poly_bernoulli_B_egf_series(long k, std::size_t order);
// Li_k(1 - e^{-t}) / (e^t - 1) up to t^order.
series1 poly_bernoulli_C_egf_series(long k, std::size_t order);
// e^{-xt} Li_k(1 - e^{-t}) / (1 - e^{-t}) up to t^order.
series1 poly_bernoulli_polynomial_egf_series(long k, const Rational &x, std::size_t order);
// n! e^{x+y} / (e^x + e^y - e^{x+y})^{n+1}, total degree <= order.
series2 script_B_egf_series(std::size_t n, std::size_t order);

// EGF-coefficient extraction from the series above, independent of the
// Stirling-sum routes.
Rational bernoulli_via_series(std::size_t n);
Integer genocchi_via_series(std::size_t n);
Rational poly_bernoulli_B_via_series(std::size_t n, long k);
Rational poly_bernoulli_C_via_series(std::size_t n, long k);

} // namespace polybern

#endif
