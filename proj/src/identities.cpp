#include <polybern/identities.hpp>

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <polybern/combinatorics.hpp>
#include <polybern/polybernoulli.hpp>

namespace polybern
{

namespace
{

// Collects equality checks into a report, applying the optional mutation and
// stopping at the first failure.
class checker
{
public:
    checker(std::string id, maybe_mutation mut) : m_mut(mut)
    {
        m_report.identity_id = std::move(id);
    }

    template <typename T>
    checker &param(std::string name, const T &value)
    {
        if constexpr (std::is_same_v<T, Rational>) {
            m_report.parameters.emplace_back(std::move(name), to_string(value));
        } else if constexpr (std::is_convertible_v<T, std::string>) {
            m_report.parameters.emplace_back(std::move(name), std::string(value));
        } else {
            m_report.parameters.emplace_back(std::move(name), std::to_string(value));
        }
        return *this;
    }

    bool failed() const
    {
        return !m_report.passed;
    }

    // Where is only invoked to label a failure.
    template <typename Where>
    bool expect(Rational lhs, const Rational &rhs, Where &&where)
    {
        if (failed()) {
            return false;
        }
        if (m_mut && m_mut->check_index == m_report.checked_count) {
            lhs += 1;
        }
        ++m_report.checked_count;
        if (lhs != rhs) {
            m_report.passed = false;
            m_report.counterexample = counterexample{where(), std::move(lhs), rhs};
            return false;
        }
        return true;
    }

    bool expect_series(const series1 &lhs, const series1 &rhs, const std::string &label)
    {
        const std::size_t n = std::min(lhs.order(), rhs.order());
        for (std::size_t k = 0; k <= n; ++k) {
            if (!expect(lhs[k], rhs[k], [&] { return label + " x^" + std::to_string(k); })) {
                return false;
            }
        }
        return true;
    }

    bool expect_series(const series2 &lhs, const series2 &rhs, const std::string &label, const char *v1 = "x",
                       const char *v2 = "y")
    {
        const std::size_t n = std::min(lhs.order(), rhs.order());
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!expect(lhs(i, j), rhs(i, j), [&] {
                        return label + " " + v1 + "^" + std::to_string(i) + " " + v2 + "^" + std::to_string(j);
                    })) {
                    return false;
                }
            }
        }
        return true;
    }

    verification_report finish()
    {
        return std::move(m_report);
    }

private:
    maybe_mutation m_mut;
    verification_report m_report;
};

std::string at(std::initializer_list<std::pair<const char *, std::size_t>> coords)
{
    std::string s;
    for (const auto &[name, v] : coords) {
        if (!s.empty()) {
            s += ",";
        }
        s += name;
        s += "=";
        s += std::to_string(v);
    }
    return s;
}

void require(bool cond, const std::string &message)
{
    if (!cond) {
        throw parameter_error(message);
    }
}

Rational sign(std::size_t e)
{
    return e % 2 == 0 ? Rational(1) : Rational(-1);
}

series1 exp_scaled(std::size_t order, const Rational &c)
{
    return exp_series(series1::monomial(order, 1, c));
}

// 1 - c x
series1 linear(std::size_t order, const Rational &c)
{
    series1 s = series1::one(order);
    if (order >= 1) {
        s[1] = -c;
    }
    return s;
}

series1 polynomial(std::size_t order, std::initializer_list<long> coeffs)
{
    series1 s(order);
    std::size_t k = 0;
    for (long c : coeffs) {
        if (k <= order) {
            s[k] = c;
        }
        ++k;
    }
    return s;
}

// 2x^3 (x - 2) / (1 - x)^2
series1 g1_inhomogeneous(std::size_t order)
{
    const series1 den_inv = inverse(linear(order, Rational(1)));
    return polynomial(order, {0, 0, 0, -4, 2}) * den_inv * den_inv;
}

// 2x^3 (3 - 6x + 2x^2) / ((1 - x)^2 (1 - 2x))
series1 f1_inhomogeneous(std::size_t order)
{
    const series1 inv1 = inverse(linear(order, Rational(1)));
    const series1 inv2 = inverse(linear(order, Rational(2)));
    return polynomial(order, {0, 0, 0, 6, -12, 4}) * inv1 * inv1 * inv2;
}

} // namespace

// --------------------------------------------------------------- duality

verification_report verify_duality(std::size_t max_l, std::size_t max_m, std::size_t max_n, maybe_mutation mut)
{
    checker c("duality", mut);
    c.param("max_l", max_l).param("max_m", max_m).param("max_n", max_n);
    for (std::size_t l = 0; l <= max_l && !c.failed(); ++l) {
        for (std::size_t m = 0; m <= max_m && !c.failed(); ++m) {
            for (std::size_t n = 0; n <= max_n; ++n) {
                if (!c.expect(script_B_def(m, l, n), script_B_def(l, m, n),
                              [&] { return at({{"l", l}, {"m", m}, {"n", n}}); })) {
                    break;
                }
            }
        }
    }
    return c.finish();
}

// --------------------------------------------------------- two-variable GFs

verification_report verify_egf(std::size_t n, std::size_t order, maybe_mutation mut)
{
    require(order >= 2, "egf: order must be >= 2");
    checker c("egf", mut);
    c.param("n", n).param("order", order);
    const series2 f = script_B_egf_series(n, order);
    if (!c.expect(f(0, 0), Rational(factorial(n)), [] { return std::string("constant term"); })) {
        return c.finish();
    }
    for (std::size_t l = 0; l <= order && !c.failed(); ++l) {
        for (std::size_t m = 0; l + m <= order; ++m) {
            if (!c.expect(egf_coefficient(f, l, m), Rational(script_B_closed(m, l, n)),
                          [&] { return at({{"l", l}, {"m", m}}); })) {
                break;
            }
        }
    }
    return c.finish();
}

verification_report verify_ogf(std::size_t n, std::size_t order, maybe_mutation mut)
{
    require(order >= 1, "ogf: order must be >= 1");
    checker c("ogf", mut);
    c.param("n", n).param("order", order);

    series2 total(order);
    for (std::size_t j = 0; j <= order; ++j) {
        // Q_j = X^j / prod_{nu=1}^{j+1} (1 - nu X) from geometric inverses ...
        series1 q = series1::monomial(order, j);
        for (std::size_t nu = 1; nu <= j + 1; ++nu) {
            q *= inverse(linear(order, Rational(static_cast<unsigned long>(nu))));
        }
        // ... and from its Stirling expansion sum_{l>=j} {l+1, j+1} X^l.
        series1 q_stirling(order);
        for (std::size_t l = 0; l <= order; ++l) {
            q_stirling[l] = stirling_second(l + 1, j + 1);
        }
        if (!c.expect_series(q, q_stirling, "Q_" + std::to_string(j))) {
            return c.finish();
        }
        const Rational weight(factorial(j) * factorial(j + n));
        total += weight * (series2::in_x(q) * series2::in_y(q));
    }
    for (std::size_t l = 0; l <= order && !c.failed(); ++l) {
        for (std::size_t m = 0; l + m <= order; ++m) {
            if (!c.expect(total(l, m), Rational(script_B_closed(m, l, n)), [&] { return at({{"l", l}, {"m", m}}); })) {
                break;
            }
        }
    }
    return c.finish();
}

verification_report verify_trivariate_with_denominator(const series2 &denominator, maybe_mutation mut)
{
    const std::size_t order = denominator.order();
    require(order >= 1, "trivariate: order must be >= 1");
    checker c("trivariate", mut);
    c.param("order", order);

    const series1 et = exp_scaled(order, Rational(1));
    const series2 exy = series2::in_x(et) * series2::in_y(et);
    const series2 d_inv = inverse(denominator);

    // 1 / (D - z) = sum_n z^n D^{-(n+1)}: the z^n coefficient is e^{x+y} D^{-(n+1)}.
    series2 term = exy * d_inv;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            term *= d_inv;
        }
        const Rational nf(factorial(n));
        const series2 closed = script_B_egf_series(n, order) * (1 / nf);
        if (!c.expect_series(term, closed, "z^" + std::to_string(n) + " vs closed form")) {
            break;
        }
        series2 values(order);
        for (std::size_t l = 0; l <= order; ++l) {
            for (std::size_t m = 0; l + m <= order; ++m) {
                values(l, m) = Rational(script_B_closed(m, l, n)) / (nf * factorial(l) * factorial(m));
            }
        }
        if (!c.expect_series(term, values, "z^" + std::to_string(n) + " vs sums")) {
            break;
        }
    }
    return c.finish();
}

verification_report verify_trivariate(std::size_t order, maybe_mutation mut)
{
    require(order >= 1, "trivariate: order must be >= 1");
    const series1 et = exp_scaled(order, Rational(1));
    const series2 ex = series2::in_x(et);
    const series2 ey = series2::in_y(et);
    return verify_trivariate_with_denominator(ex + ey - ex * ey, mut);
}

// ------------------------------------------------------------------ Takeda

verification_report verify_takeda(std::size_t n, std::size_t r, std::size_t order, maybe_mutation mut)
{
    require(r >= n, "takeda: requires r >= n (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    checker c("takeda", mut);
    c.param("n", n).param("r", r).param("order", order);

    const series1 et = exp_scaled(order, Rational(1));
    const series1 em1 = et - series1::one(order);

    // e^{nt} (e^t - 1)^{r-n} / (r-n)!
    const series1 lhs_power =
        exp_scaled(order, Rational(static_cast<unsigned long>(n))) * power(em1, static_cast<long>(r - n))
        * make_rational(Integer(1), factorial(r - n));
    series1 rhs_power(order);
    for (std::size_t m = 0; m <= order; ++m) {
        Rational acc(0);
        for (std::size_t i = 0; i <= n; ++i) {
            acc += sign(n - i) * Rational(stirling_first(n, i) * stirling_second(m + i, r));
        }
        rhs_power[m] = acc / factorial(m);
    }
    if (!c.expect_series(lhs_power, rhs_power, "power form t")) {
        return c.finish();
    }

    // sum_i {n, i} e^{it} (e^t - 1)^{r-i} / (r-i)!
    series1 lhs_partition(order);
    for (std::size_t i = 0; i <= n; ++i) {
        lhs_partition += exp_scaled(order, Rational(static_cast<unsigned long>(i)))
                         * power(em1, static_cast<long>(r - i))
                         * make_rational(stirling_second(n, i), factorial(r - i));
    }
    series1 rhs_partition(order);
    for (std::size_t m = 0; m <= order; ++m) {
        rhs_partition[m] = make_rational(stirling_second(m + n, r), factorial(m));
    }
    c.expect_series(lhs_partition, rhs_partition, "partition form t");
    return c.finish();
}

// ------------------------------------------------------------- G_n(u, t)

namespace
{

// e^{c t} as a bivariate series in (u, t).
series2 exp_in_t(std::size_t order, const Rational &c)
{
    return series2::in_y(exp_scaled(order, c));
}

// e^{nt} sum_j [n, j] d^j/du^j G(u, t), truncated to the given order.
// g must have order >= order + n.
series2 gn_from_definition(const series2 &g, std::size_t n, std::size_t order)
{
    series2 sum(order);
    series2 d = g;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) {
            d = derivative(d, var::x);
        }
        sum += d.truncate(order) * Rational(stirling_first(n, j));
    }
    return exp_in_t(order, Rational(static_cast<unsigned long>(n))) * sum;
}

// e^{-nu} sum_{m>=1} (m+n-1)!/(m-1)! e^{-mt} (1 - e^{-u})^{m-1}. The factor
// (1 - e^{-u})^{m-1} has u-valuation m-1, so m <= order + 1 is exact.
series2 gn_closed(std::size_t n, std::size_t order)
{
    const series2 one_minus = series2::one(order) - series2::in_x(exp_scaled(order, Rational(-1)));
    series2 sum(order);
    series2 p = series2::one(order);
    for (std::size_t m = 1; m <= order + 1; ++m) {
        const Rational w(factorial(m + n - 1) / factorial(m - 1));
        sum += exp_in_t(order, -Rational(static_cast<unsigned long>(m))) * p * w;
        p *= one_minus;
    }
    return series2::in_x(exp_scaled(order, -Rational(static_cast<unsigned long>(n)))) * sum;
}

} // namespace

verification_report verify_Gn_closed_form(std::size_t n, std::size_t order, maybe_mutation mut)
{
    checker c("gn-closed-form", mut);
    c.param("n", n).param("order", order);

    // G(u, t) = e^u / (1 - e^u (1 - e^t)); enough headroom for n + 1 derivatives.
    const std::size_t work = order + n + 1;
    const series2 eu = series2::in_x(exp_scaled(work, Rational(1)));
    const series2 et = exp_in_t(work, Rational(1));
    const series2 g = eu * inverse(series2::one(work) - eu * (series2::one(work) - et));

    const series2 def_n = gn_from_definition(g, n, order);
    if (!c.expect_series(def_n, gn_closed(n, order), "closed form", "u", "t")) {
        return c.finish();
    }
    if (order >= 1) {
        // d/du G_n = e^{-t} G_{n+1} - n G_n
        const series2 lhs = derivative(def_n, var::x);
        const series2 def_next = gn_from_definition(g, n + 1, order - 1);
        const series2 rhs = exp_in_t(order - 1, Rational(-1)) * def_next
                            - def_n.truncate(order - 1) * Rational(static_cast<unsigned long>(n));
        c.expect_series(lhs, rhs, "derivative recurrence", "u", "t");
    }
    return c.finish();
}

// ------------------------------------------------------- alternating sums

verification_report verify_prop41(std::size_t max_n, maybe_mutation mut)
{
    require(max_n >= 1, "prop41: max_n must be >= 1");
    checker c("prop41", mut);
    c.param("max_n", max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        Rational sum(0);
        for (std::size_t l = 0; l <= n; ++l) {
            sum += sign(l) * poly_bernoulli_B(n - l, -static_cast<long>(l));
        }
        if (!c.expect(sum, Rational(0), [&] { return at({{"n", n}}); })) {
            break;
        }
    }
    return c.finish();
}

verification_report verify_genocchi_theorem(std::size_t max_n, maybe_mutation mut)
{
    checker c("genocchi-theorem", mut);
    c.param("max_n", max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
        Rational sum(0);
        for (std::size_t l = 0; l <= n; ++l) {
            sum += sign(l) * poly_bernoulli_C(n - l, -static_cast<long>(l) - 1);
        }
        if (!c.expect(sum, Rational(-genocchi(n + 2)), [&] { return "upper -l-1, " + at({{"n", n}}); })) {
            break;
        }
        Rational variant(0);
        for (std::size_t l = 0; l <= n; ++l) {
            variant += sign(l) * poly_bernoulli_C(n - l, -static_cast<long>(l));
        }
        if (!c.expect(variant, Rational(genocchi(n + 1)), [&] { return "upper -l, " + at({{"n", n}}); })) {
            break;
        }
    }
    return c.finish();
}

// ------------------------------------------------------ functional equations

series1 beta1_series(std::size_t order)
{
    series1 s(order);
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        s[n + 1] = bernoulli(n);
    }
    return s;
}

series1 g1_series(std::size_t order)
{
    series1 s(order);
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        s[n + 1] = Rational(ipow(Integer(2), n + 1) - 2) * bernoulli(n);
    }
    return s;
}

series1 a_term_series(std::size_t j, std::size_t order)
{
    if (2 * j + 2 > order) {
        return series1(order);
    }
    series1 s = series1::monomial(order, 2 * j + 2, sign(j) * Rational(factorial(j) * factorial(j + 1)));
    for (std::size_t nu = 1; nu <= j + 1; ++nu) {
        const Rational c(static_cast<unsigned long>(nu));
        s *= inverse(linear(order, c));
        s *= inverse(linear(order, -c));
    }
    return s;
}

series1 f1_series(std::size_t order)
{
    series1 s(order);
    // a_j has valuation 2j + 2.
    for (std::size_t j = 0; 2 * j + 2 <= order; ++j) {
        s += a_term_series(j, order);
    }
    return s;
}

verification_report verify_zagier_for(const series1 &beta1, maybe_mutation mut)
{
    const std::size_t order = beta1.order();
    require(order >= 2, "zagier: order must be >= 2");
    checker c("zagier", mut);
    c.param("order", order);
    c.expect_series(mobius_substitution(beta1, Rational(1)), beta1 + series1::monomial(order, 2), "beta1(x/(1-x))");
    return c.finish();
}

verification_report verify_zagier(std::size_t order, maybe_mutation mut)
{
    require(order >= 2, "zagier: order must be >= 2");
    return verify_zagier_for(beta1_series(order), mut);
}

namespace
{

void check_g1_equation(checker &c, const series1 &g1)
{
    const std::size_t order = g1.order();
    const series1 h = g1_inhomogeneous(order);
    series1 h_expected(order);
    for (std::size_t m = 2; m + 1 <= order; ++m) {
        h_expected[m + 1] = -2 * static_cast<long>(m);
    }
    if (!c.expect_series(h, h_expected, "inhomogeneous term")) {
        return;
    }
    c.expect_series(mobius_substitution(g1, Rational(2)), g1 + h, "g1(x/(1-2x))");
}

} // namespace

verification_report verify_funceq_g1_for(const series1 &g1, maybe_mutation mut)
{
    require(g1.order() >= 3, "funceq-g1: order must be >= 3");
    checker c("funceq-g1", mut);
    c.param("order", g1.order());
    check_g1_equation(c, g1);
    return c.finish();
}

verification_report verify_funceq_g1(std::size_t order, maybe_mutation mut)
{
    require(order >= 3, "funceq-g1: order must be >= 3");
    checker c("funceq-g1", mut);
    c.param("order", order);
    const series1 g1 = g1_series(order);
    const series1 beta1 = beta1_series(order);
    if (!c.expect_series(g1, scale_argument(beta1, Rational(2)) - beta1 * Rational(2), "beta1(2x) - 2 beta1(x)")) {
        return c.finish();
    }
    check_g1_equation(c, g1);
    return c.finish();
}

verification_report verify_funceq_f2(std::size_t order, maybe_mutation mut)
{
    require(order >= 4, "funceq-f2: order must be >= 4");
    checker c("funceq-f2", mut);
    c.param("order", order);

    const series1 x = series1::variable(order);
    const series1 f1 = f1_series(order);
    const series1 f2 = x * f1 - series1::monomial(order, 2);

    if (!c.expect_series(mobius_substitution(f2, Rational(2)), f2 + g1_inhomogeneous(order), "f2(x/(1-2x))")) {
        return c.finish();
    }
    const series1 rhs1 = linear(order, Rational(2)) * f1 + f1_inhomogeneous(order);
    if (!c.expect_series(mobius_substitution(f1, Rational(2)), rhs1, "f1(x/(1-2x))")) {
        return c.finish();
    }
    // g1 = x f1 - x^2, i.e. the x^{n+1} coefficient of f2 is -G_n.
    for (std::size_t n = 0; n + 1 <= order; ++n) {
        if (!c.expect(f2[n + 1], Rational(-genocchi(n)), [&] { return "bridge " + at({{"n", n}}); })) {
            return c.finish();
        }
    }
    // f1 = x^2 f, f having the alternating C-sums as coefficients.
    for (std::size_t n = 0; n + 2 <= order; ++n) {
        Rational sum(0);
        for (std::size_t l = 0; l <= n; ++l) {
            sum += sign(l) * poly_bernoulli_C(n - l, -static_cast<long>(l) - 1);
        }
        if (!c.expect(f1[n + 2], sum, [&] { return "f coefficient " + at({{"n", n}}); })) {
            break;
        }
    }
    return c.finish();
}

// --------------------------------------------------------------- Lemma a_j

verification_report verify_lemma46_series(std::size_t n, std::size_t order, maybe_mutation mut)
{
    checker c("lemma46", mut);
    c.param("n", n).param("mode", "series").param("order", order);

    const series1 one_minus_2x = linear(order, Rational(2));
    series1 lhs(order);
    for (std::size_t j = 0; j <= n; ++j) {
        const series1 a = a_term_series(j, order);
        lhs += mobius_substitution(a, Rational(2)) - one_minus_2x * a;
    }
    lhs -= f1_inhomogeneous(order);

    const long n2 = static_cast<long>(n) + 2;
    const long n3 = static_cast<long>(n) + 3;
    // (n+3)(x-1)^2 - (n+2)(2x-1) = (2n+5) - (4n+10) x + (n+3) x^2
    const series1 quad = polynomial(order, {2 * n2 + 1, -2 * (n2 + n3), n3});
    const series1 rhs = series1::monomial(order, 1, Rational(-2)) * inverse(linear(order, Rational(1)))
                        * polynomial(order, {1, n2}) * inverse(linear(order, Rational(n3))) * quad
                        * a_term_series(n + 1, order);
    c.expect_series(lhs, rhs, "partial sum");
    return c.finish();
}

namespace
{

Rational checked_divide(const Rational &num, const Rational &den, const std::string &factor, const Rational &x)
{
    if (den == 0) {
        throw domain_error("lemma46: sample point x=" + to_string(x) + " is a pole, factor " + factor + " vanishes");
    }
    return num / den;
}

std::string factor_name(long c)
{
    if (c == 1) {
        return "(1-x)";
    }
    if (c == -1) {
        return "(1+x)";
    }
    return c > 0 ? "(1-" + std::to_string(c) + "x)" : "(1+" + std::to_string(-c) + "x)";
}

// a_j evaluated at y; x is the original sample point, for error messages.
Rational a_term_at(std::size_t j, const Rational &y, const Rational &x, const std::string &where)
{
    Rational den(1);
    for (std::size_t nu = 1; nu <= j + 1; ++nu) {
        const auto c = static_cast<long>(nu);
        for (long s : {c, -c}) {
            const Rational f = 1 - Rational(s) * y;
            if (f == 0) {
                checked_divide(Rational(1), f, factor_name(s) + where, x);
            }
            den *= f;
        }
    }
    return sign(j) * Rational(factorial(j) * factorial(j + 1)) * rpow(y, static_cast<long>(2 * j + 2)) / den;
}

} // namespace

verification_report verify_lemma46_sample(std::size_t n, std::span<const Rational> points, maybe_mutation mut)
{
    require(!points.empty(), "lemma46: sample mode needs at least one point");
    checker c("lemma46", mut);
    c.param("n", n).param("mode", "sample");
    std::string pts;
    for (const auto &p : points) {
        pts += (pts.empty() ? "" : ",") + to_string(p);
    }
    c.param("points", pts);

    const long n2 = static_cast<long>(n) + 2;
    const long n3 = static_cast<long>(n) + 3;
    for (const Rational &x : points) {
        const Rational one_minus_x = 1 - x;
        const Rational one_minus_2x = 1 - 2 * x;
        const Rational y = checked_divide(x, one_minus_2x, "(1-2x)", x);

        Rational lhs(0);
        for (std::size_t j = 0; j <= n; ++j) {
            lhs += a_term_at(j, y, x, " at x/(1-2x)") - one_minus_2x * a_term_at(j, x, x, "");
        }
        const Rational k_num = 2 * x * x * x * (3 - 6 * x + 2 * x * x);
        lhs -= checked_divide(k_num, one_minus_x * one_minus_x * one_minus_2x,
                              one_minus_x == 0 ? "(1-x)" : "(1-2x)", x);

        const Rational quad = Rational(n3) * one_minus_x * one_minus_x - Rational(n2) * (2 * x - 1);
        Rational rhs = checked_divide(-2 * x, one_minus_x, "(1-x)", x);
        rhs *= checked_divide(1 + Rational(n2) * x, 1 - Rational(n3) * x, factor_name(n3), x);
        rhs *= quad * a_term_at(n + 1, x, x, "");
        if (!c.expect(lhs, rhs, [&] { return "x=" + to_string(x); })) {
            break;
        }
    }
    return c.finish();
}

// ------------------------------------------------------ Bernoulli recursion

verification_report verify_recursion_412(std::size_t max_m, maybe_mutation mut)
{
    require(max_m >= 2, "recursion412: max_m must be >= 2");
    checker c("recursion412", mut);
    c.param("max_m", max_m);

    auto d_of = [](std::size_t n) -> Rational { return Rational(ipow(Integer(2), n + 1) - 2) * bernoulli(n); };

    if (!c.expect(d_of(0), Rational(0), [] { return std::string("d_0"); })) {
        return c.finish();
    }
    for (std::size_t m = 2; m <= max_m; ++m) {
        Rational sum(0);
        for (std::size_t n = 0; n < m; ++n) {
            sum += Rational(binomial(m, n) * ipow(Integer(2), m - n)) * d_of(n);
        }
        if (!c.expect(sum, Rational(-2 * static_cast<long>(m)), [&] { return "recursion " + at({{"m", m}}); })) {
            return c.finish();
        }
        Rational rewritten(0);
        for (std::size_t n = 0; n <= m; ++n) {
            rewritten += Rational(binomial(m, n) * ipow(Integer(2), m - n)) * bernoulli(n);
        }
        if (!c.expect(rewritten, Rational(static_cast<long>(m)) + bernoulli(m),
                      [&] { return "rewritten " + at({{"m", m}}); })) {
            return c.finish();
        }
    }

    // Forward solve: the recursion with d_0 = 0 determines every d_n.
    std::vector<Rational> d{Rational(0)};
    for (std::size_t m = 2; m <= max_m; ++m) {
        Rational rest(-2 * static_cast<long>(m));
        for (std::size_t n = 0; n + 1 < m; ++n) {
            rest -= Rational(binomial(m, n) * ipow(Integer(2), m - n)) * d[n];
        }
        d.push_back(rest / Rational(binomial(m, m - 1) * 2));
        const std::size_t idx = m - 1;
        if (!c.expect(d[idx], d_of(idx), [&] { return "unique solution " + at({{"n", idx}}); })) {
            return c.finish();
        }
    }

    // x/(e^x - 1) e^{2x} = x (e^x + 1) + x/(e^x - 1)
    const series1 bx = bernoulli_egf_series(max_m);
    const series1 ex = exp_scaled(max_m, Rational(1));
    const series1 lhs = bx * exp_scaled(max_m, Rational(2));
    const series1 rhs = series1::variable(max_m) * (ex + series1::one(max_m)) + bx;
    c.expect_series(lhs, rhs, "generating function");
    return c.finish();
}

// ---------------------------------------------------------------- driver

bool is_identity_id(std::string_view id)
{
    return std::find(identity_ids.begin(), identity_ids.end(), id) != identity_ids.end();
}

namespace
{

template <typename Fn>
verify_entry run_entry(std::string_view id, Fn &&fn)
{
    verify_entry e;
    e.identity_id = std::string(id);
    try {
        e.report = fn();
    } catch (const parameter_error &ex) {
        e.error = ex.what();
    } catch (const domain_error &ex) {
        e.error = ex.what();
    }
    return e;
}

} // namespace

std::vector<verify_entry> verify_identity(std::string_view id, const verify_config &cfg)
{
    std::vector<verify_entry> out;
    auto add = [&](auto &&fn) { out.push_back(run_entry(id, fn)); };

    if (id == "duality") {
        add([&] { return verify_duality(cfg.duality_max_l, cfg.duality_max_m, cfg.duality_max_n); });
    } else if (id == "egf") {
        for (std::size_t n = 0; n <= cfg.egf_max_n; ++n) {
            add([&] { return verify_egf(n, cfg.egf_order); });
        }
    } else if (id == "ogf") {
        for (std::size_t n = 0; n <= cfg.ogf_max_n; ++n) {
            add([&] { return verify_ogf(n, cfg.ogf_order); });
        }
    } else if (id == "trivariate") {
        add([&] { return verify_trivariate(cfg.trivariate_order); });
    } else if (id == "takeda") {
        for (std::size_t r = 0; r <= cfg.takeda_max_r; ++r) {
            for (std::size_t n = 0; n <= r; ++n) {
                add([&] { return verify_takeda(n, r, cfg.takeda_order); });
            }
        }
    } else if (id == "gn-closed-form") {
        for (std::size_t n = 0; n <= cfg.gn_max_n; ++n) {
            add([&] { return verify_Gn_closed_form(n, cfg.gn_order); });
        }
    } else if (id == "prop41") {
        add([&] { return verify_prop41(cfg.prop41_max_n); });
    } else if (id == "genocchi-theorem") {
        add([&] { return verify_genocchi_theorem(cfg.genocchi_max_n); });
    } else if (id == "zagier") {
        add([&] { return verify_zagier(cfg.zagier_order); });
    } else if (id == "funceq-g1") {
        add([&] { return verify_funceq_g1(cfg.g1_order); });
    } else if (id == "funceq-f2") {
        add([&] { return verify_funceq_f2(cfg.f2_order); });
    } else if (id == "lemma46") {
        for (std::size_t n = 0; n <= cfg.lemma46_max_n; ++n) {
            if (cfg.lemma46_mode == lemma_mode::series) {
                add([&] { return verify_lemma46_series(n, cfg.lemma46_order); });
            } else {
                add([&] { return verify_lemma46_sample(n, cfg.lemma46_points); });
            }
        }
    } else if (id == "recursion412") {
        add([&] { return verify_recursion_412(cfg.recursion_max_m); });
    } else {
        throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
    }
    return out;
}

std::vector<verify_entry> verify_all(const verify_config &cfg)
{
    std::vector<verify_entry> out;
    for (auto id : identity_ids) {
        auto part = verify_identity(id, cfg);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace polybern
