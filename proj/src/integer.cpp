#include "geode/integer.hpp"

#include "geode/errors.hpp"

#include <stdexcept>

namespace geode {

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& y, long k)
{
    if (k < 0)
        return 0;
    // mpz_bin_ui follows binom(-n, k) = (-1)^k binom(n+k-1, k), which is the
    // falling-factorial polynomial evaluated at a negative argument.
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer binomial(long y, long k)
{
    return binomial(Integer(y), k);
}

Integer multinomial(std::span<const unsigned> parts)
{
    unsigned long total = 0;
    Integer den = 1;
    for (unsigned p : parts) {
        total += p;
        den *= factorial(p);
    }
    return divide_exact(factorial(total), den, "multinomial");
}

Integer power(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer divide_exact(const Integer& num, const Integer& den, const char* what)
{
    if (den == 0)
        throw std::domain_error(std::string(what) + ": division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NotIntegral(std::string(what) + ": " + num.get_str() + " is not divisible by " + den.get_str());
    Integer r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Integer to_integer(const Rational& q, const char* what)
{
    if (q.get_den() != 1)
        throw NotIntegral(std::string(what) + ": " + q.get_str() + " is not an integer");
    return q.get_num();
}

std::string to_decimal(const Rational& q)
{
    return q.get_str(10);
}

Integer parse_integer(const std::string& text)
{
    Integer r;
    std::string s = text;
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return r;
}

} // namespace geode
