#include <polybern/rational.hpp>

#include <vector>

namespace polybern
{

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer &z)
{
    return z.get_str();
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace
{

Integer parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer factorial(std::size_t n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer &base, std::size_t e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational &base, long e)
{
    if (e >= 0) {
        const auto u = static_cast<std::size_t>(e);
        return make_rational(ipow(base.get_num(), u), ipow(base.get_den(), u));
    }
    if (base == 0) {
        throw domain_error("zero raised to a negative power");
    }
    const auto u = static_cast<std::size_t>(-e);
    return make_rational(ipow(base.get_den(), u), ipow(base.get_num(), u));
}

} // namespace polybern
