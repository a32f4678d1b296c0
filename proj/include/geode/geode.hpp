#pragma once

#include "geode/mpoly.hpp"

#include <json.hpp>

#include <span>
#include <vector>

namespace geode {

/// The Geode series G, defined by S - 1 = (t_1 + ... + t_r) G, to total degree trunc.
struct GeodeTable {
    std::size_t nvars;
    unsigned trunc;
    TruncatedSeries series;

    /// G[m]; throws OutOfRange past the truncation.
    Integer at(const ExpVec& m) const { return series.coeff(m); }
};

/// G = (solve_S(r, N + 1) - 1) / S_1.
GeodeTable geode_series(std::size_t r, unsigned N);

/// Mpoly JSON layout plus a {"kind": "geode", "r": ..., "trunc": ...} header.
nlohmann::json to_json(const GeodeTable& table);

/// G[m1, m2] = (2m1+3m2+3)! / ((2m1+2m2+3)(m1+m2+1)(m1+2m2+2)! m1! m2!)
Integer geode_closed_2var(unsigned long m1, unsigned long m2);

/// Geode coefficient with exactly two adjacent variables in play, written with
/// the parameter a for which the two variables carry alpha^a and alpha^{a+1}.
/// In the canonical numbering these are t_{a-1} and t_a, so the result is
/// G[0, ..., 0, m_a, m_a1] with a - 2 leading zeros. Requires a >= 2.
Integer geode_closed_shifted(unsigned long a, unsigned long m_a, unsigned long m_a1);

/// The canonical exponent vector (length a) addressed by geode_closed_shifted.
ExpVec shifted_index(unsigned long a, unsigned long m_a, unsigned long m_a1);

/// G with m_s = n-1-i on t_s, m_t = i on t_t (1 <= s < t), all else zero:
///   (1/n) sum_{j=0}^{i} (-1)^{i-j} binom(n, j) binom((s+1)n + (t-s)j, n-1).
Integer geode_closed_two_nonzero(unsigned long s, unsigned long t, unsigned long n, unsigned long i);

/// G in 2a variables under t_k -> (-1)^k f. Expected coefficients: a^n.
UnivariateSeries eval_alternating(unsigned long a, unsigned N);

/// Substitution pattern (-c_a, c_1, -c_1, c_2, -c_2, ..., c_{a-1}, -c_{a-1}, c_a).
std::vector<long> general_weights(std::span<const long> c);

/// G in 2a variables (a = c.size()) under general_weights(c).
/// Expected coefficients: (2a c_a - c_1 - ... - c_a)^n.
UnivariateSeries eval_general(std::span<const long> c, unsigned N);
/// Same, with the variable-pair count given explicitly; throws std::invalid_argument
/// when c.size() != a.
UnivariateSeries eval_general(unsigned long a, std::span<const long> c, unsigned N);

/// sum_{k : m_k >= 1} G[m - e_k] == C[m], with C from the hyper-Catalan closed form.
/// Throws OutOfRange if the table is too short, std::invalid_argument for m = 0.
bool geode_recurrence_check(const GeodeTable& table, const ExpVec& m);

} // namespace geode
