#ifndef POLYBERN_RATIONAL_HPP
#define POLYBERN_RATIONAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polybern
{

// Arbitrary-precision scalars. mpq_class keeps every arithmetic result in
// canonical form (gcd(num, den) = 1, den > 0); values built from a raw
// numerator/denominator pair must go through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

// Signals an argument outside an operation's mathematical domain
// (e.g. inverting a series with zero constant term, evaluating at a pole).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Signals a violated parameter precondition (e.g. r < n in the Takeda check).
class parameter_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer &num, const Integer &den);

// "p/q" in lowest terms; integers are printed without "/1".
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(std::size_t n);

// base^e for e >= 0.
Integer ipow(const Integer &base, std::size_t e);
Rational rpow(const Rational &base, long e);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace polybern

#endif
