#include "geode/geode.hpp"

#include "geode/errors.hpp"
#include "geode/hypercat.hpp"
#include "geode/series_io.hpp"

#include <stdexcept>

namespace geode {

GeodeTable geode_series(std::size_t r, unsigned N)
{
    TruncatedSeries s = solve_S(r, N + 1);
    TruncatedSeries shifted = subtract(s, TruncatedSeries::constant(r, N + 1, 1));
    return GeodeTable{r, N, divide_exact_by_S1(shifted)};
}

nlohmann::json to_json(const GeodeTable& table)
{
    nlohmann::json j = to_json(table.series);
    j["kind"] = "geode";
    j["r"] = table.nvars;
    j["trunc"] = table.trunc;
    return j;
}

Integer geode_closed_2var(unsigned long m1, unsigned long m2)
{
    Integer den = Integer(2 * m1 + 2 * m2 + 3) * (m1 + m2 + 1);
    den *= factorial(m1 + 2 * m2 + 2) * factorial(m1) * factorial(m2);
    return divide_exact(factorial(2 * m1 + 3 * m2 + 3), den, "geode_closed_2var");
}

Integer geode_closed_shifted(unsigned long a, unsigned long m_a, unsigned long m_a1)
{
    if (a < 2)
        throw std::invalid_argument("geode_closed_shifted needs a >= 2");
    const unsigned long m = m_a + m_a1;
    Integer den = Integer(a * (m + 1) + 1) * (m + 1);
    den *= factorial((a - 1) * m_a + a * (m_a1 + 1)) * factorial(m_a) * factorial(m_a1);
    return divide_exact(factorial(a * m_a + (a + 1) * (m_a1 + 1)), den, "geode_closed_shifted");
}

ExpVec shifted_index(unsigned long a, unsigned long m_a, unsigned long m_a1)
{
    if (a < 2)
        throw std::invalid_argument("shifted_index needs a >= 2");
    ExpVec m(a);
    m.set(a - 2, static_cast<ExpVec::value_type>(m_a));
    m.set(a - 1, static_cast<ExpVec::value_type>(m_a1));
    return m;
}

Integer geode_closed_two_nonzero(unsigned long s, unsigned long t, unsigned long n, unsigned long i)
{
    if (s < 1 || t <= s)
        throw std::invalid_argument("geode_closed_two_nonzero needs 1 <= s < t");
    if (n < 1 || i >= n)
        throw std::invalid_argument("geode_closed_two_nonzero needs n >= 1 and 0 <= i <= n-1");
    Integer sum = 0;
    for (unsigned long j = 0; j <= i; ++j) {
        Integer term = binomial(static_cast<long>(n), static_cast<long>(j)) *
                       binomial(static_cast<long>((s + 1) * n + (t - s) * j), static_cast<long>(n - 1));
        if ((i - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return divide_exact(sum, Integer(n), "geode_closed_two_nonzero");
}

UnivariateSeries eval_alternating(unsigned long a, unsigned N)
{
    if (a < 1)
        throw std::invalid_argument("eval_alternating needs a >= 1");
    std::vector<long> weights(2 * a);
    for (std::size_t k = 0; k < weights.size(); ++k)
        weights[k] = (k % 2 == 0) ? -1 : 1;
    return substitute_signed(geode_series(2 * a, N).series, weights);
}

std::vector<long> general_weights(std::span<const long> c)
{
    if (c.empty())
        throw std::invalid_argument("general_weights needs at least one c");
    const std::size_t a = c.size();
    std::vector<long> w;
    w.reserve(2 * a);
    w.push_back(-c[a - 1]);
    for (std::size_t k = 0; k + 1 < a; ++k) {
        w.push_back(c[k]);
        w.push_back(-c[k]);
    }
    w.push_back(c[a - 1]);
    return w;
}

UnivariateSeries eval_general(std::span<const long> c, unsigned N)
{
    const auto weights = general_weights(c);
    return substitute_signed(geode_series(weights.size(), N).series, weights);
}

UnivariateSeries eval_general(unsigned long a, std::span<const long> c, unsigned N)
{
    if (c.size() != a)
        throw std::invalid_argument("eval_general: expected " + std::to_string(a) + " values of c, got " +
                                    std::to_string(c.size()));
    return eval_general(c, N);
}

bool geode_recurrence_check(const GeodeTable& table, const ExpVec& m)
{
    if (m.size() != table.nvars)
        throw VariableMismatch("exponent vector length does not match the table");
    if (m.is_zero())
        throw std::invalid_argument("recurrence is stated for nonzero m");
    if (m.total_degree() - 1 > table.trunc)
        throw OutOfRange("table truncation " + std::to_string(table.trunc) + " too small for degree " +
                         std::to_string(m.total_degree()));
    Integer lhs = 0;
    for (std::size_t k = 0; k < m.size(); ++k)
        if (auto down = m.minus_unit(k))
            lhs += table.at(*down);
    return lhs == hyper_catalan(m);
}

} // namespace geode
