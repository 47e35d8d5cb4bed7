#ifndef POLYBERN_COMBINATORICS_HPP
#define POLYBERN_COMBINATORICS_HPP

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include <polybern/rational.hpp>

namespace polybern
{

enum class stirling_kind { first, second };

// Memoized Stirling triangle. Rows are appended on demand and kept for the
// lifetime of the table; lookups take a shared lock, growth an exclusive one.
//
// The first kind is the unsigned one:
//   [n+1, m] = [n, m-1] + n [n, m]
// the second kind
//   {n+1, m} = {n, m-1} + m {n, m}
// with [0,0] = {0,0} = 1 and zero in column 0 for n >= 1.
class stirling_table
{
public:
    explicit stirling_table(stirling_kind kind);

    stirling_table(const stirling_table &) = delete;
    stirling_table &operator=(const stirling_table &) = delete;

    stirling_kind kind() const noexcept
    {
        return m_kind;
    }

    // Zero when m > n.
    Integer operator()(std::size_t n, std::size_t m) const;

    // Grows the table so that rows 0..n are present.
    void reserve_rows(std::size_t n) const;

    std::size_t rows() const;

    // Copy of row n (length n + 1).
    std::vector<Integer> row(std::size_t n) const;

private:
    void grow_locked(std::size_t n) const;

    stirling_kind m_kind;
    mutable std::shared_mutex m_mutex;
    mutable std::vector<std::vector<Integer>> m_rows;
};

// Process-wide tables shared by every computation in the library.
const stirling_table &stirling_first_table();
const stirling_table &stirling_second_table();

Integer stirling_first(std::size_t n, std::size_t m);
Integer stirling_second(std::size_t n, std::size_t m);

// C(n, k); zero when k > n.
Integer binomial(std::size_t n, std::size_t k);

// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rational rising_factorial(const Rational &x, std::size_t n);

// sum_{l=0}^{n} (-1)^l [n, l] {l, m}; equals (-1)^n when m == n, else 0.
Integer orthogonality_check(std::size_t n, std::size_t m);

} // namespace polybern

#endif
