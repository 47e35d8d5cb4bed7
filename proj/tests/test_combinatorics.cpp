#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include <polybern/combinatorics.hpp>

using namespace polybern;

namespace
{

// Permutations of n elements by number of cycles: the unsigned first kind.
std::vector<long> cycle_counts(std::size_t n)
{
    std::vector<long> counts(n + 1, 0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) {
                continue;
            }
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
            }
        }
        ++counts[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

// Set partitions of n elements by number of blocks, via restricted growth strings.
void count_partitions(std::vector<std::size_t> &rgs, std::size_t pos, std::size_t blocks, std::vector<long> &counts)
{
    if (pos == rgs.size()) {
        ++counts[blocks];
        return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[pos] = b;
        count_partitions(rgs, pos + 1, std::max(blocks, b + 1), counts);
    }
}

std::vector<long> block_counts(std::size_t n)
{
    std::vector<long> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<std::size_t> rgs(n);
    count_partitions(rgs, 0, 0, counts);
    return counts;
}

Integer pascal(std::size_t n, std::size_t k)
{
    std::vector<Integer> row{Integer(1)};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, Integer(1));
        for (std::size_t j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : Integer(0);
}

} // namespace

TEST_CASE("first kind examples")
{
    CHECK(stirling_first(0, 0) == 1);
    CHECK(stirling_first(3, 2) == 3);
    CHECK(stirling_first(2, 5) == 0);
    CHECK(stirling_first(5, 0) == 0);
}

TEST_CASE("second kind examples")
{
    CHECK(stirling_second(0, 0) == 1);
    CHECK(stirling_second(4, 2) == 7);
    CHECK(stirling_second(3, 7) == 0);
    CHECK(stirling_second(5, 0) == 0);
}

TEST_CASE("Stirling triangles match combinatorial enumeration")
{
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto cycles = cycle_counts(n);
        const auto blocks = block_counts(n);
        for (std::size_t m = 0; m <= n; ++m) {
            CHECK(stirling_first(n, m) == cycles[m]);
            CHECK(stirling_second(n, m) == blocks[m]);
        }
    }
}

TEST_CASE("triangles reproduce their recursions")
{
    for (std::size_t n = 0; n < 30; ++n) {
        for (std::size_t m = 1; m <= n + 1; ++m) {
            CHECK(stirling_first(n + 1, m) == stirling_first(n, m - 1) + n * stirling_first(n, m));
            CHECK(stirling_second(n + 1, m) == stirling_second(n, m - 1) + m * stirling_second(n, m));
        }
        CHECK(stirling_first(n + 1, 0) == 0);
        CHECK(stirling_second(n + 1, 0) == 0);
    }
}

TEST_CASE("first kind row sums are n!")
{
    for (std::size_t n = 0; n <= 40; ++n) {
        Integer sum(0);
        for (const auto &v : stirling_first_table().row(n)) {
            sum += v;
        }
        CHECK(sum == factorial(n));
    }
    // 40! is far outside 64 bits.
    CHECK(factorial(40).get_str() == "815915283247897734345611269596115894272000000000");
}

TEST_CASE("binomial")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    for (std::size_t n = 0; n <= 30; ++n) {
        for (std::size_t k = 0; k <= n + 2; ++k) {
            CHECK(binomial(n, k) == pascal(n, k));
        }
    }
}

TEST_CASE("rising factorial")
{
    CHECK(rising_factorial(Rational(1), 3) == 6);
    CHECK(rising_factorial(Rational(2), 2) == 6);
    CHECK(rising_factorial(Rational(5, 3), 0) == 1);

    for (const Rational &x : {Rational(0), Rational(1), Rational(-1), Rational(1, 2)}) {
        for (std::size_t n = 0; n <= 25; ++n) {
            Rational sum(0);
            Rational xp(1);
            for (std::size_t j = 0; j <= n; ++j) {
                sum += Rational(stirling_first(n, j)) * xp;
                xp *= x;
            }
            CHECK(rising_factorial(x, n) == sum);
        }
    }
}

TEST_CASE("orthogonality")
{
    CHECK(orthogonality_check(3, 3) == -1);
    CHECK(orthogonality_check(4, 2) == 0);
    CHECK(orthogonality_check(0, 0) == 1);
    for (std::size_t n = 0; n <= 25; ++n) {
        for (std::size_t m = 0; m <= 25; ++m) {
            const long expected = m == n ? (n % 2 == 0 ? 1 : -1) : 0;
            CHECK(orthogonality_check(n, m) == expected);
        }
    }
}

TEST_CASE("concurrent readers see a consistent triangle while it grows")
{
    const stirling_table shared(stirling_kind::second);
    const stirling_table reference(stirling_kind::second);
    reference.reserve_rows(60);

    std::vector<std::thread> threads;
    std::vector<int> mismatches(8, 0);
    for (std::size_t t = 0; t < mismatches.size(); ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t n = t; n <= 60; n += 3) {
                for (std::size_t m = 0; m <= n; ++m) {
                    if (shared(n, m) != reference(n, m)) {
                        ++mismatches[t];
                    }
                }
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    CHECK(std::accumulate(mismatches.begin(), mismatches.end(), 0) == 0);
    CHECK(shared.rows() >= 61);
}
