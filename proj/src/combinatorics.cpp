#include <polybern/combinatorics.hpp>

#include <algorithm>
#include <mutex>

namespace polybern
{

stirling_table::stirling_table(stirling_kind kind) : m_kind(kind)
{
    m_rows.push_back({Integer(1)});
}

void stirling_table::grow_locked(std::size_t n) const
{
    if (m_rows.size() > n) {
        return;
    }
    // Geometric growth keeps the number of exclusive-lock acquisitions small.
    const std::size_t target = std::max(n + 1, 2 * m_rows.size());
    m_rows.reserve(target);
    while (m_rows.size() < target) {
        const std::size_t prev = m_rows.size() - 1;
        const auto &p = m_rows.back();
        std::vector<Integer> next(prev + 2);
        next[0] = 0;
        for (std::size_t m = 1; m <= prev + 1; ++m) {
            const Integer &left = p[m - 1];
            if (m <= prev) {
                const std::size_t mult = m_kind == stirling_kind::first ? prev : m;
                next[m] = left + p[m] * static_cast<unsigned long>(mult);
            } else {
                next[m] = left;
            }
        }
        m_rows.push_back(std::move(next));
    }
}

void stirling_table::reserve_rows(std::size_t n) const
{
    {
        std::shared_lock lock(m_mutex);
        if (m_rows.size() > n) {
            return;
        }
    }
    std::unique_lock lock(m_mutex);
    grow_locked(n);
}

Integer stirling_table::operator()(std::size_t n, std::size_t m) const
{
    if (m > n) {
        return 0;
    }
    reserve_rows(n);
    std::shared_lock lock(m_mutex);
    return m_rows[n][m];
}

std::size_t stirling_table::rows() const
{
    std::shared_lock lock(m_mutex);
    return m_rows.size();
}

std::vector<Integer> stirling_table::row(std::size_t n) const
{
    reserve_rows(n);
    std::shared_lock lock(m_mutex);
    return m_rows[n];
}

const stirling_table &stirling_first_table()
{
    static const stirling_table table(stirling_kind::first);
    return table;
}

const stirling_table &stirling_second_table()
{
    static const stirling_table table(stirling_kind::second);
    return table;
}

Integer stirling_first(std::size_t n, std::size_t m)
{
    return stirling_first_table()(n, m);
}

Integer stirling_second(std::size_t n, std::size_t m)
{
    return stirling_second_table()(n, m);
}

Integer binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational rising_factorial(const Rational &x, std::size_t n)
{
    Rational r(1);
    for (std::size_t i = 0; i < n; ++i) {
        r *= x + static_cast<unsigned long>(i);
    }
    return r;
}

Integer orthogonality_check(std::size_t n, std::size_t m)
{
    Integer sum(0);
    for (std::size_t l = 0; l <= n; ++l) {
        const Integer term = stirling_first(n, l) * stirling_second(l, m);
        if (l % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

} // namespace polybern
