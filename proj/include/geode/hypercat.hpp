#pragma once

#include "geode/mpoly.hpp"

namespace geode {

/// Multi-index of a hyper-Catalan coefficient C[m_1, ..., m_r], where t_k
/// carries the power alpha^{k+1}.
struct HyperCatalanQuery {
    ExpVec m;

    /// w = sum_k (k+1) m_k, the exponent of z collected by Lagrange inversion.
    unsigned long weighted_degree() const;
    /// l = sum_k m_k
    unsigned long length() const { return m.total_degree(); }
};

/// Series solution alpha of 0 = 1 - alpha + sum_{k=1}^{r} t_k alpha^{k+1},
/// exact through total degree N.
///
/// Fixed-point iteration alpha <- 1 + sum t_k alpha^{k+1} from alpha = 1. Each
/// pass fixes one more degree, so pass j only needs the previous iterate to
/// degree j - 1 and the loop runs exactly N times.
TruncatedSeries solve_S(std::size_t r, unsigned N);

/// C[m] = w! / ((1 + w - l)! prod m_k!), with w and l as in HyperCatalanQuery.
Integer hyper_catalan(const ExpVec& m);

/// 1 - alpha + sum_k t_k alpha^{k+1}, truncated to alpha.trunc(). Zero for the
/// series returned by solve_S.
TruncatedSeries functional_equation_residual(const TruncatedSeries& alpha);

} // namespace geode
