#include "geode/hypercat.hpp"

namespace geode {

unsigned long HyperCatalanQuery::weighted_degree() const
{
    unsigned long w = 0;
    for (std::size_t k = 0; k < m.size(); ++k)
        w += (k + 2) * static_cast<unsigned long>(m[k]);
    return w;
}

namespace {

// 1 + sum_k t_k alpha^{k+1}, kept to degree out_trunc.
TruncatedSeries fixed_point_map(const TruncatedSeries& alpha, unsigned out_trunc)
{
    const std::size_t r = alpha.nvars();
    TruncatedSeries acc = TruncatedSeries::constant(r, out_trunc, 1);
    TruncatedSeries pw = alpha;
    for (std::size_t k = 0; k < r; ++k) {
        pw = mul(pw, alpha);
        acc = add(acc, mul_by_variable(pw, k, out_trunc));
    }
    return acc;
}

} // namespace

TruncatedSeries solve_S(std::size_t r, unsigned N)
{
    TruncatedSeries alpha = TruncatedSeries::constant(r, 0, 1);
    for (unsigned j = 1; j <= N; ++j)
        alpha = fixed_point_map(alpha.truncated(j - 1), j);
    return alpha;
}

Integer hyper_catalan(const ExpVec& m)
{
    const HyperCatalanQuery q{m};
    const unsigned long w = q.weighted_degree();
    const unsigned long l = q.length();
    Integer den = factorial(1 + w - l);
    for (auto e : m.values())
        den *= factorial(e);
    return divide_exact(factorial(w), den, "hyper_catalan");
}

TruncatedSeries functional_equation_residual(const TruncatedSeries& alpha)
{
    TruncatedSeries image = fixed_point_map(alpha, alpha.trunc());
    return subtract(image, alpha);
}

} // namespace geode
