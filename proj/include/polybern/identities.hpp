#ifndef POLYBERN_IDENTITIES_HPP
#define POLYBERN_IDENTITIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <polybern/rational.hpp>
#include <polybern/series.hpp>

namespace polybern
{

struct counterexample {
    std::string at;
    Rational lhs;
    Rational rhs;
};

// Outcome of one identity check. passed == !counterexample.has_value(), and
// checked_count counts the equalities actually compared (at least one).
// Checking stops at the first failing coordinate.
struct verification_report {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool passed = true;
    std::optional<polybern::counterexample> counterexample;
    std::size_t checked_count = 0;
};

// Test hook: adds +1 to the left-hand side of the check_index-th equality
// (zero-based, in checking order). An identity check is only meaningful if
// such a perturbation makes it fail.
struct mutation {
    std::size_t check_index = 0;
};

using maybe_mutation = std::optional<mutation>;

// Symmetry of the generalized sum under l <-> m, computed from its
// definition, for all l <= max_l, m <= max_m, n <= max_n.
verification_report verify_duality(std::size_t max_l, std::size_t max_m, std::size_t max_n,
                                   maybe_mutation mut = std::nullopt);

// Exponential generating function in two variables against the closed form.
// order >= 2.
verification_report verify_egf(std::size_t n, std::size_t order, maybe_mutation mut = std::nullopt);

// Ordinary generating function sum_j j! (j+n)! Q_j(x) Q_j(y), with Q_j built
// both from geometric inverses and from Stirling numbers. order >= 1.
verification_report verify_ogf(std::size_t n, std::size_t order, maybe_mutation mut = std::nullopt);

// Three-variable generating function e^{x+y} / (D - z), D = e^x + e^y - e^{x+y},
// expanded geometrically in z. order >= 1.
verification_report verify_trivariate(std::size_t order, maybe_mutation mut = std::nullopt);
// Same, with a caller-supplied denominator D (must have order >= 1).
verification_report verify_trivariate_with_denominator(const series2 &denominator, maybe_mutation mut = std::nullopt);

// The two exponential/Stirling identities in t, for r >= n.
verification_report verify_takeda(std::size_t n, std::size_t r, std::size_t order, maybe_mutation mut = std::nullopt);

// Closed form of e^{nt} sum_j [n, j] d^j/du^j (e^u / (1 - e^u (1 - e^t))) as a
// bivariate series in (u, t), plus the derivative recurrence linking n and n+1.
verification_report verify_Gn_closed_form(std::size_t n, std::size_t order, maybe_mutation mut = std::nullopt);

// sum_{l=0}^{n} (-1)^l B_{n-l}^(-l) = 0 for 1 <= n <= max_n.
verification_report verify_prop41(std::size_t max_n, maybe_mutation mut = std::nullopt);

// sum_{l=0}^{n} (-1)^l C_{n-l}^(-l-1) = -G_{n+2}, and the variant with upper
// index -l equal to G_{n+1}, for 0 <= n <= max_n.
verification_report verify_genocchi_theorem(std::size_t max_n, maybe_mutation mut = std::nullopt);

// beta1(x / (1 - x)) = beta1(x) + x^2 for beta1 = sum B_n x^{n+1}. order >= 2.
verification_report verify_zagier(std::size_t order, maybe_mutation mut = std::nullopt);
verification_report verify_zagier_for(const series1 &beta1, maybe_mutation mut = std::nullopt);

// g1(x / (1 - 2x)) = g1(x) + 2x^3 (x - 2) / (1 - x)^2. order >= 3.
verification_report verify_funceq_g1(std::size_t order, maybe_mutation mut = std::nullopt);
verification_report verify_funceq_g1_for(const series1 &g1, maybe_mutation mut = std::nullopt);

// f2 = x f1 - x^2 satisfies the same equation as g1; f1 satisfies its own
// shifted form; f2 reproduces -G_n. order >= 4.
verification_report verify_funceq_f2(std::size_t order, maybe_mutation mut = std::nullopt);

enum class lemma_mode { series, sample };

// Telescoping identity for the partial sums of a_j, either as truncated
// series or by exact evaluation at rational points. Sample points at a pole
// raise domain_error naming the vanishing factor.
verification_report verify_lemma46_series(std::size_t n, std::size_t order, maybe_mutation mut = std::nullopt);
verification_report verify_lemma46_sample(std::size_t n, std::span<const Rational> points,
                                          maybe_mutation mut = std::nullopt);

// The Bernoulli recursion that pins down g1, its rewritten form, the forward
// solve of the uniqueness argument and the generating-function identity
// behind it. max_m >= 2.
verification_report verify_recursion_412(std::size_t max_m, maybe_mutation mut = std::nullopt);

// --- series used by the Genocchi relation ------------------------------------

// sum_{n>=0} B_n x^{n+1}
series1 beta1_series(std::size_t order);
// sum_{n>=0} (2^{n+1} - 2) B_n x^{n+1}
series1 g1_series(std::size_t order);
// (-1)^j j! (j+1)! x^{2j+2} / prod_{nu=1}^{j+1} (1 - nu x)(1 + nu x)
series1 a_term_series(std::size_t j, std::size_t order);
// sum_j a_j(x)
series1 f1_series(std::size_t order);

// --- batch driver --------------------------------------------------------------

inline constexpr std::array<std::string_view, 13> identity_ids = {
    "duality", "egf",    "ogf",    "trivariate", "takeda",  "gn-closed-form", "prop41",
    "genocchi-theorem", "zagier", "funceq-g1", "funceq-f2", "lemma46", "recursion412",
};

bool is_identity_id(std::string_view id);

struct verify_config {
    std::size_t duality_max_l = 20;
    std::size_t duality_max_m = 20;
    std::size_t duality_max_n = 6;
    std::size_t egf_max_n = 4;
    std::size_t egf_order = 14;
    std::size_t ogf_max_n = 4;
    std::size_t ogf_order = 14;
    std::size_t trivariate_order = 8;
    std::size_t takeda_max_r = 6;
    std::size_t takeda_order = 12;
    std::size_t gn_max_n = 3;
    std::size_t gn_order = 10;
    std::size_t prop41_max_n = 30;
    std::size_t genocchi_max_n = 30;
    std::size_t zagier_order = 30;
    std::size_t g1_order = 30;
    std::size_t f2_order = 30;
    std::size_t lemma46_max_n = 4;
    std::size_t lemma46_order = 30;
    lemma_mode lemma46_mode = lemma_mode::series;
    std::vector<Rational> lemma46_points = {Rational(1, 100), Rational(1, 97), Rational(-1, 101)};
    std::size_t recursion_max_m = 40;
};

// One scheduled check: either a report, or the parameter/domain error that
// prevented it from running.
struct verify_entry {
    std::string identity_id;
    std::optional<verification_report> report;
    std::optional<std::string> error;

    bool ok() const
    {
        return report.has_value() && report->passed;
    }
};

// Runs every check registered for one identity id (several parameter values
// for the per-n identities). Throws std::invalid_argument for unknown ids.
std::vector<verify_entry> verify_identity(std::string_view id, const verify_config &config = {});

// All identities in the fixed order of identity_ids.
std::vector<verify_entry> verify_all(const verify_config &config = {});

} // namespace polybern

#endif
