// Acceptance suite: one line per criterion, nonzero exit if any fails or
// runs over its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <polybern/combinatorics.hpp>
#include <polybern/identities.hpp>
#include <polybern/polybernoulli.hpp>

using namespace polybern;

namespace
{

struct outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &what)
    {
        if (ok) {
            detail = what;
        }
        ok = false;
    }

    void expect(const verification_report &r)
    {
        if (!r.passed) {
            std::string what = r.identity_id;
            for (const auto &[k, v] : r.parameters) {
                what += " " + k + "=" + v;
            }
            if (r.counterexample) {
                what += " at " + r.counterexample->at + ": lhs=" + to_string(r.counterexample->lhs)
                        + " rhs=" + to_string(r.counterexample->rhs);
            }
            fail(what);
        }
    }
};

struct criterion {
    int number;
    const char *title;
    double limit_seconds;
    std::function<outcome()> body;
};

outcome genocchi_values()
{
    outcome o;
    const long expected[] = {0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0};
    for (std::size_t n = 0; n < std::size(expected); ++n) {
        if (genocchi(n) != expected[n]) {
            o.fail("G_" + std::to_string(n) + " = " + to_string(genocchi(n)));
        }
    }
    return o;
}

outcome generalized_duality()
{
    outcome o;
    o.expect(verify_duality(20, 20, 6));
    return o;
}

outcome route_equivalence()
{
    outcome o;
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t m = 0; m <= 12; ++m) {
            for (std::size_t l = 0; l <= 12; ++l) {
                if (script_B_def(m, l, n) != Rational(script_B_closed(m, l, n))) {
                    o.fail("m=" + std::to_string(m) + " l=" + std::to_string(l) + " n=" + std::to_string(n));
                }
            }
        }
    }
    return o;
}

outcome egf_theorem()
{
    outcome o;
    for (std::size_t n = 0; n <= 4; ++n) {
        o.expect(verify_egf(n, 14));
    }
    return o;
}

outcome ogf_theorem()
{
    outcome o;
    for (std::size_t n = 0; n <= 4; ++n) {
        o.expect(verify_ogf(n, 14));
    }
    return o;
}

outcome genocchi_theorem()
{
    outcome o;
    o.expect(verify_genocchi_theorem(30));
    return o;
}

outcome alternating_B_sum()
{
    outcome o;
    o.expect(verify_prop41(30));
    return o;
}

outcome functional_equations()
{
    outcome o;
    o.expect(verify_zagier(30));
    o.expect(verify_funceq_g1(30));
    o.expect(verify_funceq_f2(30));
    for (std::size_t n = 0; n <= 4; ++n) {
        o.expect(verify_lemma46_series(n, 30));
    }
    o.expect(verify_recursion_412(40));
    return o;
}

outcome takeda_and_gn()
{
    outcome o;
    for (std::size_t r = 0; r <= 6; ++r) {
        for (std::size_t n = 0; n <= r; ++n) {
            o.expect(verify_takeda(n, r, 12));
        }
    }
    for (std::size_t n = 0; n <= 3; ++n) {
        o.expect(verify_Gn_closed_form(n, 10));
    }
    return o;
}

outcome mutation_sensitivity()
{
    using runner = std::function<verification_report(maybe_mutation)>;
    static const std::vector<Rational> points = {Rational(1, 100), Rational(1, 97), Rational(-1, 101)};
    const std::vector<std::pair<const char *, runner>> checks = {
        {"duality", [](maybe_mutation m) { return verify_duality(20, 20, 6, m); }},
        {"egf", [](maybe_mutation m) { return verify_egf(4, 14, m); }},
        {"ogf", [](maybe_mutation m) { return verify_ogf(4, 14, m); }},
        {"trivariate", [](maybe_mutation m) { return verify_trivariate(8, m); }},
        {"takeda", [](maybe_mutation m) { return verify_takeda(3, 6, 12, m); }},
        {"gn-closed-form", [](maybe_mutation m) { return verify_Gn_closed_form(3, 10, m); }},
        {"prop41", [](maybe_mutation m) { return verify_prop41(30, m); }},
        {"genocchi-theorem", [](maybe_mutation m) { return verify_genocchi_theorem(30, m); }},
        {"zagier", [](maybe_mutation m) { return verify_zagier(30, m); }},
        {"funceq-g1", [](maybe_mutation m) { return verify_funceq_g1(30, m); }},
        {"funceq-f2", [](maybe_mutation m) { return verify_funceq_f2(30, m); }},
        {"lemma46 series", [](maybe_mutation m) { return verify_lemma46_series(4, 30, m); }},
        {"lemma46 sample", [](maybe_mutation m) { return verify_lemma46_sample(4, points, m); }},
        {"recursion412", [](maybe_mutation m) { return verify_recursion_412(40, m); }},
    };

    outcome o;
    for (const auto &[name, run] : checks) {
        const auto clean = run(std::nullopt);
        if (!clean.passed || clean.checked_count == 0) {
            o.fail(std::string(name) + " does not pass unmutated");
            continue;
        }
        const std::size_t last = clean.checked_count - 1;
        for (std::size_t idx : {std::size_t(0), last / 3, last / 2, last}) {
            const auto bad = run(mutation{idx});
            if (bad.passed || !bad.counterexample || bad.counterexample->at.empty()) {
                o.fail(std::string(name) + " survives a +1 at check " + std::to_string(idx));
            }
        }
    }

    // Perturbed inputs, not just perturbed comparisons.
    series1 beta = beta1_series(30);
    beta[3] += 1;
    if (verify_zagier_for(beta).passed) {
        o.fail("zagier accepts a perturbed B_2");
    }
    series1 g = g1_series(30);
    g[5] += 1;
    if (verify_funceq_g1_for(g).passed) {
        o.fail("funceq-g1 accepts a perturbed g1");
    }
    const series1 e = exp_series(series1::variable(8));
    const series2 ex = series2::in_x(e), ey = series2::in_y(e);
    series2 d = ex + ey - ex * ey;
    d(2, 1) += 1;
    if (verify_trivariate_with_denominator(d).passed) {
        o.fail("trivariate accepts a perturbed denominator");
    }
    return o;
}

outcome small_dualities()
{
    outcome o;
    for (long m = 0; m <= 20; ++m) {
        for (long l = 0; l <= 20; ++l) {
            if (poly_bernoulli_B(m, -l) != poly_bernoulli_B(l, -m)) {
                o.fail("B duality m=" + std::to_string(m) + " l=" + std::to_string(l));
            }
            if (poly_bernoulli_C(m, -l - 1) != poly_bernoulli_C(l, -m - 1)) {
                o.fail("C duality m=" + std::to_string(m) + " l=" + std::to_string(l));
            }
        }
    }

    // Li_{-1}(z)/z = 1/(1-z)^2 and Li_{-2}(z) = z(1+z)/(1-z)^3, so with
    // z = 1 - e^{-t} the two generating functions collapse to e^{2t} and
    // 2e^{2t} - e^t.
    const std::size_t order = 15;
    const series1 t = series1::variable(order);
    const series1 e1 = exp_series(t);
    const series1 e2 = exp_series(t * Rational(2));
    const series1 b_oracle = e2;
    const series1 c_oracle = e2 * Rational(2) - e1;
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational b = poly_bernoulli_B(n, -1);
        if (b != Rational(ipow(2, n)) || b != egf_coefficient(b_oracle, n) || b != poly_bernoulli_B_via_series(n, -1)) {
            o.fail("B_" + std::to_string(n) + "^(-1) = " + to_string(b));
        }
        const Rational c = poly_bernoulli_C(n, -2);
        if (c != Rational(ipow(2, n + 1) - 1) || c != egf_coefficient(c_oracle, n)
            || c != poly_bernoulli_C_via_series(n, -2)) {
            o.fail("C_" + std::to_string(n) + "^(-2) = " + to_string(c));
        }
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<criterion> criteria = {
        {1, "Genocchi values n = 0..11", 1, genocchi_values},
        {2, "generalized duality m, l <= 20, n <= 6", 60, generalized_duality},
        {3, "definition vs closed form m, l <= 12, n <= 6", 30, route_equivalence},
        {4, "two-variable EGF n <= 4, degree <= 14", 60, egf_theorem},
        {5, "two-variable OGF n <= 4, degree <= 14", 60, ogf_theorem},
        {6, "Genocchi alternating C-sums n <= 30", 10, genocchi_theorem},
        {7, "alternating B-sum vanishes 1 <= n <= 30", 10, alternating_B_sum},
        {8, "functional equations at order 30, recursion m <= 40", 60, functional_equations},
        {9, "exponential/Stirling pair r <= 6 and G_n closed form n <= 3", 60, takeda_and_gn},
        {10, "mutation sensitivity", 30, mutation_sensitivity},
        {11, "B/C dualities and closed values against series oracles", 10, small_dualities},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = c.body();
        } catch (const std::exception &ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_seconds) {
            o.fail("over time budget");
        }
        failures += o.ok ? 0 : 1;
        std::printf("[%s] criterion %2d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title,
                    secs, c.limit_seconds, o.ok ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
